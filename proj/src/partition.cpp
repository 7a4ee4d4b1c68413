#include "partfam/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace partfam {

namespace {

constexpr Int kMaxParsedValue = 1'000'000'000;  // desk-scale cap for CLI input

Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("partition weight exceeds 64-bit range");
    return out;
}

Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("partition weight exceeds 64-bit range");
    return out;
}

} // namespace

Partition::Partition(std::vector<PartBlock> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
        if (b.part < 1)
            throw std::domain_error("partition part must be >= 1, got " +
                                    std::to_string(b.part));
        if (b.mult < 0)
            throw std::domain_error("partition multiplicity must be >= 0, got " +
                                    std::to_string(b.mult));
    }
    std::erase_if(blocks_, [](const PartBlock& b) { return b.mult == 0; });
    std::sort(blocks_.begin(), blocks_.end(),
              [](const PartBlock& x, const PartBlock& y) { return x.part > y.part; });
    // merge runs of equal parts
    std::size_t out = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (out > 0 && blocks_[out - 1].part == blocks_[i].part)
            blocks_[out - 1].mult = checked_add(blocks_[out - 1].mult, blocks_[i].mult);
        else
            blocks_[out++] = blocks_[i];
    }
    blocks_.resize(out);
}

Int Partition::weight() const {
    Int total = 0;
    for (const auto& b : blocks_)
        total = checked_add(total, checked_mul(b.part, b.mult));
    return total;
}

Int Partition::mult_of(Int part) const {
    for (const auto& b : blocks_)
        if (b.part == part)
            return b.mult;
    return 0;
}

Partition normalize(std::span<const Int> parts) {
    std::vector<PartBlock> blocks;
    blocks.reserve(parts.size());
    for (Int p : parts) {
        if (p < 1)
            throw std::domain_error("partition part must be >= 1, got " +
                                    std::to_string(p));
        blocks.push_back({p, 1});
    }
    return Partition(std::move(blocks));
}

Partition normalize(std::initializer_list<Int> parts) {
    return normalize(std::span<const Int>(parts.begin(), parts.size()));
}

Partition multiset_union(const Partition& lhs, const Partition& rhs) {
    std::vector<PartBlock> blocks(lhs.blocks().begin(), lhs.blocks().end());
    blocks.insert(blocks.end(), rhs.blocks().begin(), rhs.blocks().end());
    return Partition(std::move(blocks));
}

namespace {

void enumerate_rec(Int remaining, Int max_part, std::vector<PartBlock>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (Int part = std::min(remaining, max_part); part >= 1; --part) {
        for (Int mult = remaining / part; mult >= 1; --mult) {
            acc.push_back({part, mult});
            enumerate_rec(remaining - part * mult, part - 1, acc, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(Int n) {
    if (n < 0)
        throw std::domain_error("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<PartBlock> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("partition syntax error at offset " +
                                    std::to_string(pos) + ": " + what);
    }

    Int integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        Int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxParsedValue)
                fail("value exceeds the 10^9 desk-scale cap");
            ++pos;
        }
        return value;
    }

    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

} // namespace

Partition parse_partition(std::string_view text) {
    Scanner sc{text};
    std::vector<PartBlock> blocks;
    if (sc.done())
        return Partition();
    for (;;) {
        Int part = sc.integer();
        if (part == 0)
            sc.fail("part must be positive");
        Int mult = 1;
        if (sc.accept('^')) {
            mult = sc.integer();
            if (mult == 0)
                sc.fail("multiplicity must be positive");
        }
        blocks.push_back({part, mult});
        if (!sc.accept(','))
            break;
    }
    if (!sc.done())
        sc.fail("trailing characters");
    return Partition(std::move(blocks));
}

std::string render(const Partition& p) {
    std::string out;
    for (const auto& b : p.blocks()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(b.part);
        if (b.mult != 1) {
            out += '^';
            out += std::to_string(b.mult);
        }
    }
    return out;
}

} // namespace partfam
