/** @file partition.hpp
 *  @brief Canonical integer-partition representation in multiplicity notation.
 *
 *  A partition is stored as a list of (part, multiplicity) blocks with parts
 *  strictly decreasing. Two partitions are equal iff they are equal as
 *  multisets, which the canonical form reduces to plain vector equality.
 */
#ifndef PARTFAM_PARTITION_HPP
#define PARTFAM_PARTITION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partfam {

using Int = long long;

struct PartBlock {
    Int part;
    Int mult;
    friend auto operator<=>(const PartBlock&, const PartBlock&) = default;
};

class Partition {
public:
    /// The empty partition (weight 0).
    Partition() = default;

    /// Canonicalizes: merges equal parts, sorts parts decreasing, drops
    /// zero-multiplicity blocks. Rejects parts < 1 and negative multiplicities.
    explicit Partition(std::vector<PartBlock> blocks);

    std::span<const PartBlock> blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    std::size_t block_count() const { return blocks_.size(); }

    /// Sum of part * mult over all blocks. Throws std::overflow_error if the
    /// sum does not fit in Int.
    Int weight() const;

    /// Multiplicity of the given part value, 0 when absent.
    Int mult_of(Int part) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<PartBlock> blocks_;
};

/// Canonical partition from a plain list of parts (any order, repeats allowed).
/// Rejects entries < 1.
Partition normalize(std::span<const Int> parts);
Partition normalize(std::initializer_list<Int> parts);

/// Multiset union: multiplicities add per part.
Partition multiset_union(const Partition& lhs, const Partition& rhs);

/// All partitions of n, in lexicographically decreasing order of the part
/// list ((n) first, (1^n) last). n = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(Int n);

/// Text format: comma-separated blocks `part^mult`, `^mult` omitted when the
/// multiplicity is 1, e.g. "5^2,1^7". Whitespace is ignored and the empty
/// string denotes the empty partition. Parts and multiplicities are capped at
/// 10^9. Syntax errors report the offending byte offset.
Partition parse_partition(std::string_view text);
std::string render(const Partition& p);

} // namespace partfam

#endif
