#pragma once

#include <complex>
#include <vector>

namespace coeffbounds {

using Complex = std::complex<double>;

/// First three Taylor coefficients (p1, p2, p3) of a Caratheodory function
/// p(z) = 1 + p1 z + p2 z^2 + ...  Always |pn| <= 2.
struct CarCoeffs {
    Complex p1, p2, p3;
};

/// First three coefficients (c1, c2, c3) of a Schwarz function
/// phi(z) = c1 z + c2 z^2 + c3 z^3 + ...
struct SchwarzCoeffs {
    Complex c1, c2, c3;
};

/// Finite positive probability measure on the unit circle; the Herglotz
/// representative of a Caratheodory function.  Weights must be nonnegative
/// and sum to 1 (renormalized on construction if the sum deviates by less
/// than 1e-9, rejected otherwise).  Angles are normalized to [0, 2*pi).
class AtomicMeasure {
public:
    struct Atom {
        double weight;
        double angle;
    };

    explicit AtomicMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }

private:
    std::vector<Atom> atoms_;
};

/// Schur parameters: an exact parameterization of the attainable
/// (c1, c2, c3) body of the Schwarz class.  Each |ti| <= 1.
struct SchurParams {
    Complex t1, t2, t3;
};

/// p_n = 2 * sum_k w_k exp(-i n theta_k), n = 1, 2, 3.
CarCoeffs coeffs_from_measure(const AtomicMeasure& m);

/// Coefficients of p = (1 + phi) / (1 - phi).
CarCoeffs schwarz_to_caratheodory(const SchwarzCoeffs& c);

/// Inverse of schwarz_to_caratheodory.
SchwarzCoeffs caratheodory_to_schwarz(const CarCoeffs& p);

/// Schur-algorithm map:
///   c1 = t1,
///   c2 = (1 - |t1|^2) t2,
///   c3 = (1 - |t1|^2) ((1 - |t2|^2) t3 - conj(t1) t2^2).
/// Sweeping (t1, t2, t3) over the closed polydisk covers exactly the
/// attainable coefficient triples.  Throws if some |ti| > 1.
SchwarzCoeffs schur_to_schwarz(const SchurParams& s);

/// Carlson's necessary conditions:
///   |c1| <= 1,  |c2| <= 1 - |c1|^2,  |c3| <= 1 - |c1|^2 - |c2|^2/(1 + |c1|),
/// each with absolute tolerance 1e-12.
bool carlson_feasible(const SchwarzCoeffs& c);

} // namespace coeffbounds
