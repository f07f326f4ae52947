#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ririg/algebra.hpp"

namespace ririg {

/// A subset of a universe of at most 64 elements, stored as a bit mask.
class SubsetMask {
public:
    SubsetMask() = default;
    explicit SubsetMask(std::size_t n, std::uint64_t bits = 0) : bits_(bits & full_bits(n)), n_(n) {
        if (n > max_universe) throw ShapeError("subset universe larger than " + std::to_string(max_universe));
    }
    SubsetMask(std::size_t n, std::initializer_list<Elem> elems) : SubsetMask(n) {
        for (Elem e : elems) insert(e);
    }

    static SubsetMask full(std::size_t n) { return SubsetMask(n, full_bits(n)); }
    static SubsetMask of(std::size_t n, const std::vector<Elem>& elems) {
        SubsetMask s(n);
        for (Elem e : elems) s.insert(e);
        return s;
    }

    std::size_t universe() const noexcept { return n_; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(Elem e) const noexcept { return e < 64 && ((bits_ >> e) & 1U); }

    void insert(Elem e) {
        if (e >= n_) throw ShapeError("element " + std::to_string(e) + " outside subset universe");
        bits_ |= std::uint64_t{1} << e;
    }

    bool subset_of(const SubsetMask& o) const noexcept { return (bits_ & ~o.bits_) == 0; }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<Elem>(std::countr_zero(b)));
        return out;
    }

    friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) {
        a.bits_ &= b.bits_;
        return a;
    }
    friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) {
        a.bits_ |= b.bits_;
        return a;
    }
    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

    /// Order by cardinality, then by mask value.
    friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits_ < b.bits_;
    }

private:
    static std::uint64_t full_bits(std::size_t n) {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    std::uint64_t bits_ = 0;
    std::size_t n_ = 0;
};

}  // namespace ririg
