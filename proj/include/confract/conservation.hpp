#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "confract/conformable.hpp"
#include "confract/systems.hpp"

namespace confract {

enum class Atom { u, v, u_x, v_x, u_xx, v_xx, u_t, v_t, u_xt, v_xt };

const char* atom_name(Atom a);
double atom_value(Atom a, const SolutionDerivatives& d);

/// coef * x^x_pow * t^t_pow
struct Monomial {
    double coef = 1;
    double x_pow = 0;
    double t_pow = 0;

    double operator()(double x, double t) const;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial operator*(double s, const Monomial& m);
inline Monomial operator-(const Monomial& m) { return -1.0 * m; }

struct Term {
    Monomial mono;
    Atom atom;
};

/// Linear combination of solution-derivative atoms with monomial coefficients.
class Expr {
public:
    Expr() = default;
    Expr(Atom a) : terms_{Term{Monomial{}, a}} {}

    const std::vector<Term>& terms() const { return terms_; }

    double evaluate(const SolutionDerivatives& d, double x, double t) const;
    /// Largest |term| at the point.
    double magnitude(const SolutionDerivatives& d, double x, double t) const;
    std::string to_string() const;

    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    Expr& operator*=(const Monomial& m);

private:
    std::vector<Term> terms_;
};

Expr operator+(Expr a, const Expr& b);
Expr operator-(Expr a, const Expr& b);
Expr operator-(Expr a);
Expr operator*(const Monomial& m, Expr e);
Expr operator*(double s, Expr e);
inline Expr operator*(Expr e, double s) { return s * std::move(e); }
inline Expr operator/(Expr e, double s) { return (1 / s) * std::move(e); }

inline Monomial xpow(double p) { return {1, p, 0}; }
inline Monomial tpow(double p) { return {1, 0, p}; }

enum class SystemId { example31, eq3 };

/// corrected: four terms of the uncorrected form are amended so the vectors are actually conserved.
enum class Transcription { corrected, uncorrected };

struct ConservedVector {
    SystemId system;
    int case_id;
    std::array<double, 4> k;
    /// Coefficients of k1..k4.
    std::array<Expr, 4> ct_parts;
    std::array<Expr, 4> cx_parts;

    Expr ct() const;
    Expr cx() const;

    double Ct(const SolutionDerivatives& d, double x, double t) const;
    double Cx(const SolutionDerivatives& d, double x, double t) const;
};

ConservedVector conserved_vector(int case_id, const std::array<double, 4>& k, const Example31Params& p, Order alpha,
                                 Transcription tr = Transcription::corrected);
ConservedVector conserved_vector(int case_id, const std::array<double, 4>& k, const Eq3Params& p, Order alpha,
                                 Transcription tr = Transcription::corrected);

struct Divergence {
    double value;
    double scale;  // largest |term| in C^t, C^x and their total derivatives

    double scaled() const;
};

/// Step of the five-point stencils in x and t.
inline constexpr double divergence_step = 1e-3;

/// D_t C^t + D_x C^x by five-point central differences of C evaluated at shifted points.
Divergence divergence_detail(const ConservedVector& cv, const SolutionPair& sol, const EvalPoint& p);
double divergence(const ConservedVector& cv, const SolutionPair& sol, const EvalPoint& p);

}  // namespace confract
