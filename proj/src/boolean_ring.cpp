#include "cfgspace/boolean_ring.hpp"

#include <bit>
#include <sstream>

namespace cfgspace {

namespace {

void require_same_omega(const BoolElem& a, const BoolElem& b) {
    if (a.omega_size() != b.omega_size())
        throw DimensionError("Boolean ring elements over different atom sets: " +
                             std::to_string(a.omega_size()) + " vs " +
                             std::to_string(b.omega_size()));
}

std::uint32_t full_mask(int omega) { return omega == 0 ? 0u : (1u << omega) - 1u; }

} // namespace

BoolElem::BoolElem(std::uint32_t bits, int omega_size) : bits_(bits), omega_(omega_size) {
    if (omega_size < 0 || omega_size > kMaxOmega)
        throw DimensionError("atom set size out of range: " + std::to_string(omega_size));
    if ((bits & ~full_mask(omega_size)) != 0)
        throw DimensionError("atoms outside the atom set");
}

BoolElem BoolElem::one(int omega_size) { return BoolElem(full_mask(omega_size), omega_size); }

BoolElem BoolElem::from_atoms(std::initializer_list<int> atoms, int omega_size) {
    return from_atoms(std::vector<int>(atoms), omega_size);
}

BoolElem BoolElem::from_atoms(const std::vector<int>& atoms, int omega_size) {
    std::uint32_t bits = 0;
    for (int a : atoms) {
        if (a < 0 || a >= omega_size)
            throw DimensionError("atom index out of range: " + std::to_string(a));
        bits |= 1u << a;
    }
    return BoolElem(bits, omega_size);
}

bool BoolElem::test(int atom) const {
    if (atom < 0 || atom >= omega_)
        throw DimensionError("atom index out of range: " + std::to_string(atom));
    return (bits_ >> atom) & 1u;
}

bool BoolElem::is_one() const { return bits_ == full_mask(omega_); }

int BoolElem::count() const { return std::popcount(bits_); }

BoolElem BoolElem::complement() const { return BoolElem(~bits_ & full_mask(omega_), omega_); }

std::vector<int> BoolElem::atoms() const {
    std::vector<int> out;
    for (int a = 0; a < omega_; ++a)
        if ((bits_ >> a) & 1u) out.push_back(a);
    return out;
}

std::string BoolElem::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int a : atoms()) {
        if (!first) os << ',';
        os << a;
        first = false;
    }
    os << '}';
    return os.str();
}

BoolElem operator+(const BoolElem& a, const BoolElem& b) {
    require_same_omega(a, b);
    return BoolElem(a.bits_ ^ b.bits_, a.omega_);
}

BoolElem operator*(const BoolElem& a, const BoolElem& b) {
    require_same_omega(a, b);
    return BoolElem(a.bits_ & b.bits_, a.omega_);
}

BoolElem join(const BoolElem& a, const BoolElem& b) {
    if (a.omega_size() != b.omega_size())
        throw DimensionError("join over different atom sets");
    return BoolElem(a.bits() | b.bits(), a.omega_size());
}

bool leq(const BoolElem& a, const BoolElem& b) { return a * b == a; }

bool is_partition(const std::vector<BoolElem>& parts, bool require_complete) {
    if (parts.empty()) return !require_complete;
    const int omega = parts.front().omega_size();
    std::uint32_t seen = 0;
    for (const BoolElem& p : parts) {
        if (p.omega_size() != omega)
            throw DimensionError("partition parts over different atom sets");
        if ((seen & p.bits()) != 0) return false;
        seen |= p.bits();
    }
    if (require_complete && seen != BoolElem::one(omega).bits()) return false;
    return true;
}

Partition Partition::complete(std::vector<BoolElem> parts) {
    if (!is_partition(parts, /*require_complete=*/true))
        throw PartitionError("coefficients are not a complete partition of unity");
    return Partition(std::move(parts), true);
}

Partition Partition::partial(std::vector<BoolElem> parts) {
    if (!is_partition(parts, /*require_complete=*/false))
        throw PartitionError("coefficients are not pairwise disjoint");
    return Partition(std::move(parts), false);
}

} // namespace cfgspace
