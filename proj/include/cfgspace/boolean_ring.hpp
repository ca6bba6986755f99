#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cfgspace/errors.hpp"

namespace cfgspace {

/// Element of the finite Boolean ring B = 2^Omega, stored as a bitmask over
/// the atom set {0, ..., omega_size-1}. Sum is symmetric difference (so the
/// ring has characteristic 2), product is intersection, and the lattice
/// order a <= b is subset inclusion, equivalently ab = a.
class BoolElem {
public:
    static constexpr int kMaxOmega = 30;

    BoolElem(std::uint32_t bits, int omega_size);

    static BoolElem zero(int omega_size) { return BoolElem(0u, omega_size); }
    static BoolElem one(int omega_size);
    static BoolElem from_atoms(std::initializer_list<int> atoms, int omega_size);
    static BoolElem from_atoms(const std::vector<int>& atoms, int omega_size);

    std::uint32_t bits() const { return bits_; }
    int omega_size() const { return omega_; }
    bool test(int atom) const;
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const;
    int count() const;

    BoolElem complement() const;

    /// Atoms that are on, ascending.
    std::vector<int> atoms() const;

    std::string str() const;

    friend BoolElem operator+(const BoolElem& a, const BoolElem& b);
    friend BoolElem operator*(const BoolElem& a, const BoolElem& b);
    friend bool operator==(const BoolElem& a, const BoolElem& b) {
        return a.omega_ == b.omega_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const BoolElem& a, const BoolElem& b) { return !(a == b); }
    friend bool operator<(const BoolElem& a, const BoolElem& b) {
        return a.omega_ != b.omega_ ? a.omega_ < b.omega_ : a.bits_ < b.bits_;
    }

private:
    std::uint32_t bits_;
    int omega_;
};

/// a \/ b = a + b + ab, the lattice join (set union).
BoolElem join(const BoolElem& a, const BoolElem& b);

/// a <= b in the lattice order, i.e. ab = a.
bool leq(const BoolElem& a, const BoolElem& b);

/// True iff the parts are pairwise disjoint and, when required, join to 1.
/// An empty list is a valid incomplete partition; it is complete only over
/// the empty atom set.
bool is_partition(const std::vector<BoolElem>& parts, bool require_complete);

/// A validated list of pairwise disjoint coefficients; optionally complete
/// (joining to 1). Coefficient families of convex combinations are complete
/// partitions.
class Partition {
public:
    static Partition complete(std::vector<BoolElem> parts);
    static Partition partial(std::vector<BoolElem> parts);

    const std::vector<BoolElem>& parts() const { return parts_; }
    bool is_complete() const { return complete_; }
    std::size_t size() const { return parts_.size(); }
    const BoolElem& operator[](std::size_t i) const { return parts_[i]; }

private:
    Partition(std::vector<BoolElem> parts, bool complete)
        : parts_(std::move(parts)), complete_(complete) {}

    std::vector<BoolElem> parts_;
    bool complete_;
};

} // namespace cfgspace
