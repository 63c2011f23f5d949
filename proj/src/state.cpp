#include "qwoa/state.hpp"

#include "qwoa/errors.hpp"

#include <cmath>

namespace qwoa {

StateVector::StateVector(std::size_t dim) : amps_(dim, cdouble(0.0, 0.0)) {
    if (dim == 0) throw ParameterError("state vector: dimension must be >= 1");
}

StateVector StateVector::uniform(std::size_t dim) {
    StateVector s(dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (cdouble& a : s.amps_) a = amp;
    return s;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    StateVector s(dim);
    if (index >= dim) throw RangeError("basis state: index outside [0, M)");
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const cdouble& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

void apply_dft(StateVector& s, FourierDirection direction) {
    dft(s.amplitudes(), direction);
}

void apply_phase(StateVector& s, std::span<const double> values, double angle, int sign) {
    if (values.size() != s.dim())
        throw DimensionError("apply_phase: value vector length does not match state dimension");
    if (angle == 0.0) return;
    const double a = sign < 0 ? -angle : angle;
    for (std::size_t x = 0; x < s.dim(); ++x)
        s[x] *= std::polar(1.0, a * values[x]);
}

void ctqw(StateVector& s, const Spectrum& spectrum, double t, int sign) {
    if (spectrum.m() != s.dim())
        throw DimensionError("ctqw: spectrum dimension does not match state dimension");
    if (t == 0.0) return;
    apply_dft(s, FourierDirection::Inverse);
    apply_phase(s, spectrum.eigenvalues, t, sign);
    apply_dft(s, FourierDirection::Forward);
}

void ctqw(StateVector& s, const CirculantGraph& g, double t, int sign) {
    ctqw(s, eigenvalues(g), t, sign);
}

std::vector<double> probabilities(const StateVector& s) {
    std::vector<double> p(s.dim());
    for (std::size_t x = 0; x < s.dim(); ++x) p[x] = std::norm(s[x]);
    return p;
}

double expectation(const StateVector& s, std::span<const double> qualities) {
    if (qualities.size() != s.dim())
        throw DimensionError("expectation: quality vector length does not match state dimension");
    double acc = 0.0;
    for (std::size_t x = 0; x < s.dim(); ++x) acc += std::norm(s[x]) * qualities[x];
    return acc;
}

} // namespace qwoa
