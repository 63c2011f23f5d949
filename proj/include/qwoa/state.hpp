#pragma once

#include "qwoa/circulant.hpp"
#include "qwoa/fft.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qwoa {

// Complex amplitude vector of arbitrary dimension M (not necessarily a power
// of two).  Unitary operations keep the 2-norm at 1 within 1e-12.
class StateVector {
public:
    explicit StateVector(std::size_t dim);

    static StateVector uniform(std::size_t dim);
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    cdouble& operator[](std::size_t i) { return amps_[i]; }
    const cdouble& operator[](std::size_t i) const { return amps_[i]; }
    std::vector<cdouble>& amplitudes() { return amps_; }
    const std::vector<cdouble>& amplitudes() const { return amps_; }

    double norm() const;

private:
    std::vector<cdouble> amps_;
};

// Unitary DFT of the state, kernel omega^{jk}/sqrt(M).
void apply_dft(StateVector& s, FourierDirection direction);

// amplitude_x <- exp(i * sign * angle * values_x) * amplitude_x
void apply_phase(StateVector& s, std::span<const double> values, double angle, int sign = +1);

// Continuous-time quantum walk over the circulant graph for time t,
// exp(sign * i * t * C) with sign = -1 by default (propagator e^{-itC}),
// computed as F * exp(sign * i * t * lambda) * F^dag.
void ctqw(StateVector& s, const Spectrum& spectrum, double t, int sign = -1);
void ctqw(StateVector& s, const CirculantGraph& g, double t, int sign = -1);

std::vector<double> probabilities(const StateVector& s);
double expectation(const StateVector& s, std::span<const double> qualities);

} // namespace qwoa
