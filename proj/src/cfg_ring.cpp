#include "cfgspace/cfg_ring.hpp"

#include <sstream>

namespace cfgspace {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_same_spec(const RingElem& x, const RingElem& y) {
    if (x.spec() != y.spec())
        throw DimensionError("ring elements over different rings: " + x.spec().str() + " vs " +
                             y.spec().str());
}

int mod_pow(int base, int e, int p) {
    int r = 1;
    base %= p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

} // namespace

RingSpec::RingSpec(int p, int omega) : p(p), omega(omega) {
    if (!is_prime(p)) throw DimensionError("modulus must be prime, got " + std::to_string(p));
    if (omega < 1 || omega > BoolElem::kMaxOmega)
        throw DimensionError("atom set size out of range: " + std::to_string(omega));
}

std::string RingSpec::str() const {
    return "GF(" + std::to_string(p) + ")^" + std::to_string(omega);
}

RingElem::RingElem(RingSpec spec, std::vector<int> components)
    : spec_(spec), comps_(std::move(components)) {
    if (comps_.size() != static_cast<std::size_t>(spec_.omega))
        throw DimensionError("component count does not match the atom set size");
    for (int c : comps_)
        if (c < 0 || c >= spec_.p)
            throw DimensionError("component out of range for modulus " + std::to_string(spec_.p));
}

RingElem RingElem::zero(const RingSpec& spec) { return constant(spec, 0); }

RingElem RingElem::one(const RingSpec& spec) { return constant(spec, 1); }

RingElem RingElem::constant(const RingSpec& spec, int c) {
    return RingElem(spec, std::vector<int>(static_cast<std::size_t>(spec.omega), c));
}

bool RingElem::is_zero() const {
    for (int c : comps_)
        if (c != 0) return false;
    return true;
}

RingElem RingElem::pow(int e) const {
    std::vector<int> out(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out[i] = mod_pow(comps_[i], e, spec_.p);
    return RingElem(spec_, std::move(out));
}

std::string RingElem::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << ',';
        os << comps_[i];
    }
    os << ')';
    return os.str();
}

RingElem operator+(const RingElem& x, const RingElem& y) {
    require_same_spec(x, y);
    std::vector<int> out(x.comps_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (x.comps_[i] + y.comps_[i]) % x.spec_.p;
    return RingElem(x.spec_, std::move(out));
}

RingElem operator-(const RingElem& x, const RingElem& y) {
    require_same_spec(x, y);
    std::vector<int> out(x.comps_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (x.comps_[i] - y.comps_[i] + x.spec_.p) % x.spec_.p;
    return RingElem(x.spec_, std::move(out));
}

RingElem operator*(const RingElem& x, const RingElem& y) {
    require_same_spec(x, y);
    std::vector<int> out(x.comps_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.comps_[i] * y.comps_[i] % x.spec_.p;
    return RingElem(x.spec_, std::move(out));
}

RingElem RingElem::operator-() const { return zero(spec_) - *this; }

bool operator<(const RingElem& x, const RingElem& y) {
    if (x.spec_.p != y.spec_.p) return x.spec_.p < y.spec_.p;
    if (x.spec_.omega != y.spec_.omega) return x.spec_.omega < y.spec_.omega;
    return x.comps_ < y.comps_;
}

BoolElem idempotent_of(const RingElem& x) {
    std::uint32_t bits = 0;
    const auto& comps = x.components();
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i] != 0) bits |= 1u << i;
    return BoolElem(bits, x.spec().omega);
}

RingElem embed(const BoolElem& a, const RingSpec& spec) {
    if (a.omega_size() != spec.omega)
        throw DimensionError("Boolean element over a different atom set");
    std::vector<int> out(static_cast<std::size_t>(spec.omega), 0);
    for (int i = 0; i < spec.omega; ++i)
        if (a.test(i)) out[static_cast<std::size_t>(i)] = 1;
    return RingElem(spec, std::move(out));
}

RingElem scalar_act(const BoolElem& a, const RingElem& x) {
    if (a.omega_size() != x.spec().omega)
        throw DimensionError("Boolean coefficient over a different atom set");
    std::vector<int> out(x.components());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!a.test(static_cast<int>(i))) out[i] = 0;
    return RingElem(x.spec(), std::move(out));
}

RingElem unit_inverse(const RingElem& x) {
    const int p = x.spec().p;
    std::vector<int> out(x.components().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int c = x.components()[i];
        if (c == 0) throw NotAUnitError("component " + std::to_string(i) + " is zero");
        // Fermat: c^(p-2) inverts c mod p.
        int inv = 1;
        for (int k = 0; k < p - 2; ++k) inv = inv * c % p;
        out[i] = inv;
    }
    return RingElem(x.spec(), std::move(out));
}

std::vector<RingElem> canonical_generators(const RingSpec& spec) {
    std::vector<RingElem> gens;
    gens.reserve(static_cast<std::size_t>(spec.p - 1));
    for (int c = 1; c < spec.p; ++c) gens.push_back(RingElem::constant(spec, c));
    return gens;
}

} // namespace cfgspace
