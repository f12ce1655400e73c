// spin_env.hpp — decoherence factors for a finite bath of tunneling spins

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bigeo/errors.hpp"

namespace bigeo::spin_env {

struct SpinRecord {
    double h{1.0};   // tunneling matrix element of the bath spin
    double eps{0.0}; // coupling to qubit 1
    double lam{0.0}; // coupling to qubit 2
};

struct SpinBathSpec {
    std::vector<SpinRecord> spins;

    std::size_t size() const { return spins.size(); }

    void validate() const {
        if (spins.empty()) throw domain_error("SpinBathSpec: bath must have N >= 1 spins");
        for (const auto& s : spins) {
            if (s.h < 0.0) throw domain_error("SpinBathSpec: h must be >= 0");
            const double plus = s.eps + s.lam;
            const double minus = s.eps - s.lam;
            if (s.h * s.h + plus * plus <= 0.0 || s.h * s.h + minus * minus <= 0.0)
                throw domain_error("SpinBathSpec: h^2 + (eps +/- lam)^2 must be > 0 for every spin");
        }
    }

    static SpinBathSpec homogeneous(std::size_t n, double h, double eps, double lam) {
        SpinBathSpec b;
        b.spins.assign(n, SpinRecord{h, eps, lam});
        return b;
    }

    // Couplings drawn uniformly from [eps_lo,eps_hi] x [lam_lo,lam_hi] with a
    // common tunneling element h; seeded and reproducible.
    static SpinBathSpec random(std::size_t n, double h, double eps_lo, double eps_hi,
                               double lam_lo, double lam_hi, std::uint64_t seed);
};

// Q(t) = prod_i [1 - (2(eps_i+lam_i)^2 / (h_i^2+(eps_i+lam_i)^2))
//                  sin^2(t sqrt(h_i^2+(eps_i+lam_i)^2))], the damping of the
// |00><11| coherence. |Q| <= 1; individual factors may be negative.
double q_factor(const SpinBathSpec& bath, double t);

// Same product built on (eps_i - lam_i): damping of |01><10|. Identically 1
// when eps_i = lam_i for every i (decoherence-free subspace).
double p_factor(const SpinBathSpec& bath, double t);

// Literal dispersion estimate sqrt(sum_i p_i) with
// p_i = 1 - (eps_i+lam_i)^2 / (4(h_i^2+(eps_i+lam_i)^2)); grows like sqrt(N).
double dispersion_estimate(const SpinBathSpec& bath);

// sigma / N, the bounded companion of the raw estimate.
double dispersion_estimate_normalized(const SpinBathSpec& bath);

// Time average of |Q| over [0, t_end] on a uniform grid; the empirical object
// behind the 1/sqrt(N) size-scaling claim for synchronized-revival baths.
double mean_abs_q(const SpinBathSpec& bath, double t_end, std::size_t samples);

} // namespace bigeo::spin_env
