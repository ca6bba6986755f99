#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfgspace/boolean_ring.hpp"
#include "cfgspace/errors.hpp"

namespace cfgspace {

/// Parameters of the ring A = GF(p)^Omega: a prime modulus and the size of
/// the atom set. B(A), the Boolean ring of idempotents of A, is 2^Omega.
struct RingSpec {
    int p;
    int omega;

    RingSpec(int p, int omega);

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.p == b.p && a.omega == b.omega;
    }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

    std::string str() const;
};

/// Element of A = GF(p)^Omega with componentwise arithmetic. Components are
/// residues in {0, ..., p-1}, indexed by atom.
class RingElem {
public:
    RingElem(RingSpec spec, std::vector<int> components);

    static RingElem zero(const RingSpec& spec);
    static RingElem one(const RingSpec& spec);
    /// The constant tuple (c, ..., c).
    static RingElem constant(const RingSpec& spec, int c);

    const RingSpec& spec() const { return spec_; }
    const std::vector<int>& components() const { return comps_; }
    int component(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const;

    RingElem pow(int e) const;

    std::string str() const;

    friend RingElem operator+(const RingElem& x, const RingElem& y);
    friend RingElem operator-(const RingElem& x, const RingElem& y);
    friend RingElem operator*(const RingElem& x, const RingElem& y);
    RingElem operator-() const;

    friend bool operator==(const RingElem& x, const RingElem& y) {
        return x.spec_ == y.spec_ && x.comps_ == y.comps_;
    }
    friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }
    friend bool operator<(const RingElem& x, const RingElem& y);

private:
    RingSpec spec_;
    std::vector<int> comps_;
};

/// e(x): the unique idempotent generating the ideal xA. Atom i is on iff
/// component i is nonzero; equals x^(p-1) computed in A.
BoolElem idempotent_of(const RingElem& x);

/// The 0/1 tuple of A matching a Boolean element, i.e. the inclusion
/// B(A) -> A.
RingElem embed(const BoolElem& a, const RingSpec& spec);

/// a . x: component i of x where atom i of a is on, 0 elsewhere.
RingElem scalar_act(const BoolElem& a, const RingElem& x);

/// Componentwise inverse of a unit. Throws NotAUnitError when any component
/// is zero.
RingElem unit_inverse(const RingElem& x);

/// The nonzero constant tuples (c, ..., c), c = 1..p-1. Together with 0 they
/// generate A under convex closure.
std::vector<RingElem> canonical_generators(const RingSpec& spec);

} // namespace cfgspace
