#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bgk {

/* The type of a simply-connected simple compact Lie group: the multiset
 * {n_1 <= ... <= n_l} with rational cohomology exterior on degrees 2n_i - 1.
 * A multiset rather than a strict chain because Spin(4m) repeats the entry
 * 2m.  `dim` is the manifold dimension when known; it must then satisfy
 * sum(2n_i - 1) == dim, which is the independent check on the tables. */
struct GroupType {
    std::vector<int> entries;      // sorted, every entry >= 2
    std::string name;              // canonical catalog name, empty for custom types
    std::optional<long long> dim;  // manifold dimension, for cross-checking

    int rank() const { return static_cast<int>(entries.size()); }
    int max_entry() const { return entries.back(); }

    // "SU(5)" for named groups, "type:{2,4,6}" for custom ones.
    std::string display() const;

    bool operator==(const GroupType&) const = default;
};

/* Catalog lookup by canonical name: SU(n) n>=2, Sp(n) n>=1, Spin(n) n>=7
 * plus the low aliases Spin(3)=SU(2), Spin(5)=Sp(2), Spin(6)=SU(4), and
 * G2, F4, E6, E7, E8.  Throws std::invalid_argument for anything else
 * (including the non-simple Spin(4)). */
GroupType lookup_group(const std::string& name);

/* Parses a --group argument: either a catalog name, case-insensitive with
 * optional whitespace ("su(5)", " Spin(10) ", "e8"), or an explicit literal
 * "type:2,4,6" with optional "@dim=D".  Literal entries are sorted and
 * duplicates kept; entries below 2 are rejected.  Errors carry the
 * position of the offending character. */
GroupType parse_group_spec(const std::string& text);

// sum(2n_i - 1) == dim; requires dim to be present.
bool dimension_check(const GroupType& t);

}  // namespace bgk
