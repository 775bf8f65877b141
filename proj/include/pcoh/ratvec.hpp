#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "pcoh/rational.hpp"

namespace pcoh {

// Sparse exact vector indexed by web positions. Only nonzero entries are
// stored, kept sorted by index. Entries may be negative; operations that
// require nonnegativity check it explicitly (is_nonnegative).
class RatVec {
public:
    RatVec() = default;

    // Dense constructor: zeros are elided.
    explicit RatVec(const std::vector<Rat>& dense);

    static RatVec unit(int index) { return RatVec({{index, rat(1)}}, Sorted{}); }

    Rat at(int index) const;
    void set(int index, const Rat& value);  // value 0 removes the entry

    bool is_zero() const { return entries_.empty(); }
    bool is_nonnegative() const;
    int max_index() const { return entries_.empty() ? -1 : entries_.back().first; }

    const std::vector<std::pair<int, Rat>>& entries() const { return entries_; }

    RatVec operator+(const RatVec& other) const;
    RatVec operator-(const RatVec& other) const;
    RatVec scaled(const Rat& factor) const;

    Rat dot(const RatVec& other) const;
    Rat sum() const;

    // Coordinatewise comparison: true when *this <= other everywhere.
    bool leq(const RatVec& other) const;
    // Coordinatewise maximum.
    RatVec max_with(const RatVec& other) const;

    bool operator==(const RatVec& other) const { return entries_ == other.entries_; }
    bool operator!=(const RatVec& other) const { return !(*this == other); }

    // Lexicographic order on dense coordinate sequences; total, used for
    // deterministic canonical sorting of generator/facet lists.
    static bool lex_less(const RatVec& a, const RatVec& b);

    std::vector<Rat> to_dense(int dim) const;

private:
    struct Sorted {};
    RatVec(std::vector<std::pair<int, Rat>> entries, Sorted) : entries_(std::move(entries)) {}

    std::vector<std::pair<int, Rat>> entries_;
};

}  // namespace pcoh
