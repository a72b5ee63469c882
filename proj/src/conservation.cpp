#include "confract/conservation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace confract {

const char* atom_name(Atom a)
{
    switch (a) {
    case Atom::u: return "u";
    case Atom::v: return "v";
    case Atom::u_x: return "u_x";
    case Atom::v_x: return "v_x";
    case Atom::u_xx: return "u_xx";
    case Atom::v_xx: return "v_xx";
    case Atom::u_t: return "u_t";
    case Atom::v_t: return "v_t";
    case Atom::u_xt: return "u_xt";
    case Atom::v_xt: return "v_xt";
    }
    return "?";
}

double atom_value(Atom a, const SolutionDerivatives& d)
{
    switch (a) {
    case Atom::u: return d.u;
    case Atom::v: return d.v;
    case Atom::u_x: return d.u_x;
    case Atom::v_x: return d.v_x;
    case Atom::u_xx: return d.u_xx;
    case Atom::v_xx: return d.v_xx;
    case Atom::u_t: return d.u_t;
    case Atom::v_t: return d.v_t;
    case Atom::u_xt: return d.u_xt;
    case Atom::v_xt: return d.v_xt;
    }
    return 0;
}

double Monomial::operator()(double x, double t) const
{
    double r = coef;
    if (x_pow != 0)
        r *= std::pow(x, x_pow);
    if (t_pow != 0)
        r *= std::pow(t, t_pow);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    return {a.coef * b.coef, a.x_pow + b.x_pow, a.t_pow + b.t_pow};
}

Monomial operator*(double s, const Monomial& m) { return {s * m.coef, m.x_pow, m.t_pow}; }

double Expr::evaluate(const SolutionDerivatives& d, double x, double t) const
{
    double sum = 0;
    for (const Term& tm : terms_)
        sum += tm.mono(x, t) * atom_value(tm.atom, d);
    return sum;
}

double Expr::magnitude(const SolutionDerivatives& d, double x, double t) const
{
    double m = 0;
    for (const Term& tm : terms_)
        m = std::max(m, std::abs(tm.mono(x, t) * atom_value(tm.atom, d)));
    return m;
}

namespace {

std::string num(double v)
{
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

std::string Expr::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const Term& tm : terms_) {
        const double c = tm.mono.coef;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        s += num(std::abs(c));
        if (tm.mono.x_pow != 0)
            s += "*x^" + num(tm.mono.x_pow);
        if (tm.mono.t_pow != 0)
            s += "*t^" + num(tm.mono.t_pow);
        s += "*";
        s += atom_name(tm.atom);
    }
    return s;
}

Expr& Expr::operator+=(const Expr& o)
{
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Monomial& m)
{
    for (Term& tm : terms_)
        tm.mono = m * tm.mono;
    return *this;
}

Expr operator+(Expr a, const Expr& b) { return a += b; }
Expr operator-(Expr a, const Expr& b) { return a -= b; }
Expr operator-(Expr a) { return a *= Monomial{-1, 0, 0}; }
Expr operator*(const Monomial& m, Expr e) { return e *= m; }
Expr operator*(double s, Expr e) { return e *= Monomial{s, 0, 0}; }

Expr ConservedVector::ct() const
{
    Expr e;
    for (int i = 0; i < 4; ++i)
        if (k[i] != 0)
            e += k[i] * ct_parts[i];
    return e;
}

Expr ConservedVector::cx() const
{
    Expr e;
    for (int i = 0; i < 4; ++i)
        if (k[i] != 0)
            e += k[i] * cx_parts[i];
    return e;
}

double ConservedVector::Ct(const SolutionDerivatives& d, double x, double t) const
{
    double s = 0;
    for (int i = 0; i < 4; ++i)
        if (k[i] != 0)
            s += k[i] * ct_parts[i].evaluate(d, x, t);
    return s;
}

double ConservedVector::Cx(const SolutionDerivatives& d, double x, double t) const
{
    double s = 0;
    for (int i = 0; i < 4; ++i)
        if (k[i] != 0)
            s += k[i] * cx_parts[i].evaluate(d, x, t);
    return s;
}

namespace {

const Expr u = Atom::u, v = Atom::v;
const Expr ux = Atom::u_x, vx = Atom::v_x;
const Expr uxx = Atom::u_xx, vxx = Atom::v_xx;
const Expr ut = Atom::u_t, vt = Atom::v_t;
const Expr uxt = Atom::u_xt, vxt = Atom::v_xt;

Monomial X(double p) { return xpow(p); }
Monomial T(double p) { return tpow(p); }

using Parts = std::array<Expr, 4>;

void example31_case(int id, double a, double b, double al, bool uncorrected, Parts& ct, Parts& cx)
{
    const double S = std::sqrt(a * b);
    const double ib = 1 / b;
    switch (id) {
    case 1:
        cx[0] = ib * (b * X(1) * T(al) * vxt + al * b * X(2) * T(al - 1) * vxx + al * b * b * X(1) * T(al - 1) * ux
                      + b * b * T(al) * ut - b * T(al) * vt);
        // uncorrected form lacks the factor x on the u_x term
        cx[1] = ib * (X(1) * T(al) * vxt + al * X(2) * T(al - 1) * vxx + b * X(1) * T(al) * uxt
                      + al * b * X(2) * T(al - 1) * uxx + al * a * b * X(1) * T(al - 1) * vx
                      + al * b * X(uncorrected ? 0 : 1) * T(al - 1) * ux + (a * b - 1) * T(al) * vt);
        cx[2] = ib * (al * X(1 + S) * T(al - 1) * (S * vxx + b * uxx)
                      + X(S) * (S * (T(al) * vxt + al * T(al - 1) * vx) + b * (T(al) * uxt + al * T(al - 1) * ux)));
        cx[3] = ib * (-al * X(1 - S) * T(al - 1) * (S * vxx - b * uxx)
                      - X(-S) * (S * (T(al) * vxt + al * T(al - 1) * vx) - b * (T(al) * uxt + al * T(al - 1) * ux)));
        ct[0] = -al * X(1) * vx - T(1) * vt;
        ct[1] = ib * (-al * b * X(1) * ux - b * T(1) * ut - al * X(1) * vx - T(1) * vt);
        ct[2] = ib * (-al * X(S) * (S * vx + b * ux) - S * T(1) * X(S - 1) * vt - b * T(1) * X(S - 1) * ut);
        ct[3] = ib * (T(1) * X(-1 - S) * (S * vt - b * ut) + al * X(-S) * (S * vx - b * ux));
        break;
    case 2:
        cx[0] = X(1) * vxt + b * ut - vt;
        cx[1] = ib * (X(1) * vxt + b * X(1) * uxt + (a * b - 1) * vt);
        cx[2] = ib * X(S) * (S * vxt + b * uxt);
        cx[3] = -ib * X(-S) * (S * vxt - b * uxt);
        ct[0] = -T(1 - al) * vt;
        ct[1] = ib * T(1 - al) * (-b * ut - vt);
        ct[2] = -ib * X(S - 1) * T(1 - al) * (S * vt + b * ut);
        ct[3] = ib * X(-1 - S) * T(1 - al) * (S * vt - b * ut);
        break;
    case 3:
        cx[0] = ib * (T(2 * al - 1) * (2 * al * b * X(2) * vxx + al * b * (3 * b * X(1) * ux + a * b * v - b * u))
                      + b * X(1) * T(2 * al) * vxt + al * al * X(1) * T(al - 1) * (b * X(1) * vx + b * b * u)
                      + T(2 * al) * (b * b * ut - b * vt));
        // uncorrected form lacks the factor alpha on the v_xx term
        cx[1] = ib * (T(2 * al - 1) * ((uncorrected ? 2 : 2 * al) * X(2) * vxx
                                       + al * b * (2 * X(2) * uxx + 3 * X(1) * ux + 3 * a * X(1) * vx + (a * b - 1) * u))
                      + X(1) * T(2 * al) * vxt + b * X(1) * T(2 * al) * uxt
                      + al * al * X(1) * T(al - 1) * (b * X(1) * ux + X(1) * vx + b * (a * v + u))
                      + (a * b - 1) * T(2 * al) * vt);
        cx[2] = ib * (al * X(1 + S) * (T(2 * al - 1) * (2 * S * vxx + 2 * b * uxx) + al * T(al - 1) * (S * vx + b * ux))
                      + X(S) * T(2 * al - 1) * (al * S * (b * ux + 2 * vx) + al * b * (a * vx + 2 * ux))
                      + X(S) * (S * (al * al * T(al - 1) * v + T(2 * al) * vxt)
                                + b * (al * al * T(al - 1) * u + T(2 * al) * uxt)));
        cx[3] = ib * (-al * X(1 - S) * (T(2 * al - 1) * (2 * S * vxx - 2 * b * uxx) + al * T(al - 1) * (S * vx - b * ux))
                      + X(-S) * (al * T(2 * al - 1) * (S * (-b * ux - 2 * vx) + b * (a * vx + 2 * ux))
                                 + S * (-al * al * T(al - 1) * v - T(2 * al) * vxt)
                                 + b * (al * al * T(al - 1) * u + T(2 * al) * uxt)));
        ct[0] = ib * (-b * T(1 + al) * vt - al * (2 * b * X(1) * T(al) * vx + b * b * T(al) * u + al * b * X(1) * v));
        ct[1] = ib * (T(1 + al) * (-b * ut - vt)
                      - al * (2 * b * X(1) * T(al) * ux + 2 * X(1) * T(al) * vx + b * T(al) * (a * v + u)
                              + al * X(1) * (b * u + v)));
        ct[2] = ib * (-2 * al * X(S) * (S * (T(al) * vx + (al / 2) * v) + b * (T(al) * ux + (al / 2) * u))
                      - S * X(S - 1) * (al * b * T(al) * u + T(1 + al) * vt) - b * X(S - 1) * T(1 + al) * ut
                      - al * a * b * X(S - 1) * T(al) * v);
        ct[3] = ib * (-X(-1 - S) * (S * (-al * b * T(al) * u - T(1 + al) * vt) + b * (al * a * T(al) * v + T(1 + al) * ut))
                      + 2 * al * X(-S) * (S * (T(al) * vx + (al / 2) * v) - b * (T(al) * ux + (al / 2) * u)));
        break;
    case 4:
        cx[0] = ib * T(al - 1) * (-b * X(1) * vx - b * b * u + b * v);
        cx[1] = ib * T(al - 1) * (-X(1) * vx - b * X(1) * ux + (1 - a * b) * v);
        cx[2] = -ib * X(S) * T(al - 1) * (S * vx + b * ux);
        cx[3] = ib * T(al - 1) * (S * X(-S) * vx - b * X(-S) * ux);
        ct[0] = v;
        ct[1] = ib * (b * u + v);
        ct[2] = ib * X(S - 1) * (S * v + b * u);
        ct[3] = -ib * X(-1 - S) * (S * v - b * u);
        break;
    case 5: {
        // uncorrected form has the opposite overall sign
        const double sg = uncorrected ? 1 : -1;
        cx[0] = sg * T(al - 1) * (b * X(1) * ux + a * b * v - b * u);
        cx[1] = sg * T(al - 1) * (X(1) * ux + a * X(1) * vx + (a * b - 1) * u);
        cx[2] = sg * X(S) * T(al - 1) * (a * vx + S * ux);
        cx[3] = sg * X(-S) * T(al - 1) * (a * vx - S * ux);
        ct[0] = b * u;
        ct[1] = a * v + u;
        ct[2] = X(S - 1) * (a * v + S * u);
        ct[3] = X(-1 - S) * (a * v - S * u);
        break;
    }
    default:
        throw ParameterError("conserved vector case must be 1..5");
    }
}

void eq3_case(int id, double c, double m, double n, double al, bool uncorrected, Parts& ct, Parts& cx)
{
    const double S = std::sqrt(m * n);
    const double in = 1 / n;
    const double c1 = c - 1;
    switch (id) {
    case 1:
        cx[0] = (in / 2) * (2 * n * X(1) * T(al) * vxt + al * n * X(2) * T(al - 1) * vxx
                            + al * X(1) * T(al - 1) * (c * n * vx + n * n * ux) - 2 * T(al) * ((1 - c) * n * vt - n * n * ut));
        cx[1] = (in / 2) * (-2 * c1 * X(1) * T(al) * vxt - al * c1 * X(2) * T(al - 1) * vxx + 2 * n * X(1) * T(al) * uxt
                            + al * n * X(2) * T(al - 1) * uxx - al * X(1) * T(al - 1) * ((-m * n + c * c1) * vx - n * ux)
                            - 2 * (-m * n + c1 * c1) * T(al) * vt);
        cx[2] = (in / 2) * (al * T(al - 1) * X(c + S + 1) * (S * vxx + n * uxx)
                            + X(c + S) * (S * (al * T(al - 1) * vx + 2 * T(al) * vxt)
                                          + n * (al * T(al - 1) * ux + 2 * T(al) * uxt)));
        cx[3] = (in / 2) * (-al * T(al - 1) * X(c - S + 1) * (S * vxx - n * uxx)
                            - X(c - S) * (S * (al * T(al - 1) * vx + 2 * T(al) * vxt)
                                          - n * (al * T(al - 1) * ux + 2 * T(al) * uxt)));
        ct[0] = -0.5 * X(1) * (al * X(1) * vx + 2 * T(1) * vt);
        ct[1] = (in / 2) * (-2 * n * X(1) * T(1) * ut - al * n * X(2) * ux + c1 * X(1) * (al * X(1) * vx + 2 * T(1) * vt));
        ct[2] = (in / 2) * (-2 * T(1) * X(c + S) * (S * vt + n * ut) - S * al * X(c + S + 1) * vx
                            - n * al * X(c + S + 1) * ux);
        ct[3] = (in / 2) * (al * X(c - S + 1) * (S * vx - n * ux) + 2 * T(1) * X(c - S) * (S * vt - n * ut));
        break;
    case 2:
        cx[0] = in * (n * X(1) * vxt + n * c1 * vt + n * n * ut);
        cx[1] = in * ((1 - c) * X(1) * vxt + n * X(1) * uxt + (m * n - c1 * c1) * vt);
        cx[2] = in * X(c + S) * (S * vxt + n * uxt);
        cx[3] = -in * X(c - S) * (S * vxt - n * uxt);
        ct[0] = -X(1) * T(1 - al) * vt;
        ct[1] = in * X(1) * T(1 - al) * (c1 * vt - n * ut);
        ct[2] = -in * X(c + S) * T(1 - al) * (S * vt + n * ut);
        ct[3] = in * X(c - S) * T(1 - al) * (S * vt - n * ut);
        break;
    case 3:
        cx[0] = (in / 4) * (-2 * al * T(2 * al - 1)
                                * (-2 * n * X(2) * vxx - (1 + 3 * c) * n * X(1) * vx - 3 * n * n * X(1) * ux
                                   + (-m * n * n - (c * c - 1) * n) * v - 2 * c * n * n * u)
                            + 4 * n * X(1) * T(2 * al) * vxt
                            - al * al * X(2) * T(al - 1) * (-n * X(1) * vx + (-c - 1) * n * v - n * n * u)
                            - 4 * T(2 * al) * ((1 - c) * n * vt - n * n * ut));
        cx[1] = (in / 4) * (-2 * al * T(2 * al - 1)
                                * (2 * c1 * X(2) * vxx - 2 * n * X(2) * uxx
                                   + (-3 * m * n + (3 * c + 1) * c1) * X(1) * vx - 4 * n * X(1) * ux
                                   + (-(c + 1) * m * n + (c + 1) * c1 * c1) * v + (-m * n + c1 * c1) * n * u)
                            - 4 * c1 * X(1) * T(2 * al) * vxt + 4 * n * X(1) * T(2 * al) * uxt
                            - al * al * X(2) * T(al - 1) * (c1 * X(1) * vx - n * X(1) * ux + (c * c - m * n - 1) * v - 2 * n * u)
                            - 4 * (-m * n + c1 * c1) * T(2 * al) * vt);
        cx[2] = (in / 4) * (2 * al * X(c + S + 1) * (T(2 * al - 1) * (2 * S * vxx + 2 * n * uxx) + al * T(al - 1) * (n * u + S * v))
                            + al * al * T(al - 1) * X(c + S + 2) * (S * vx + n * ux)
                            + 2 * X(c + S) * (al * T(2 * al - 1) * (S * ((c + 3) * vx + n * ux) + n * (m * vx + (c + 3) * ux))
                                              + 2 * T(2 * al) * (S * vxt + n * uxt)));
        cx[3] = (in / 4) * (2 * al * X(c - S + 1) * (T(2 * al - 1) * (-2 * S * vxx + 2 * n * uxx) + al * T(al - 1) * (n * u - S * v))
                            - al * al * T(al - 1) * X(c - S + 2) * (S * vx - n * ux)
                            - 2 * X(c - S) * (al * T(2 * al - 1) * (S * ((c + 3) * vx + n * ux) - n * (m * vx + (c + 3) * ux))
                                              + 2 * T(2 * al) * (S * vxt - n * uxt)));
        ct[0] = (in / 2) * X(1) * (-2 * n * T(1 + al) * vt
                                   + al * (-2 * n * X(1) * T(al) * vx + T(al) * ((-c - 1) * n * v - n * n * u)
                                           - (al * n / 2) * X(2) * v));
        ct[1] = (in / 2) * X(1) * (T(1 + al) * (2 * c1 * vt - 2 * n * ut)
                                   + al * (2 * c1 * X(1) * T(al) * vx - 2 * n * X(1) * T(al) * ux
                                           + T(al) * ((c * c - m * n - 1) * v - 2 * n * u) + (al / 2) * X(2) * (c1 * v - n * u)));
        ct[2] = (in / 4) * (-4 * al * T(al) * X(c + S + 1) * (S * vx + n * ux) - al * al * X(c + S + 2) * (n * u + S * v)
                            - 2 * X(c + S) * (S * (2 * T(1 + al) * vt + al * T(al) * ((c + 1) * v + n * u))
                                              + n * (2 * T(1 + al) * ut + al * T(al) * (m * v + (c + 1) * u))));
        ct[3] = (in / 4) * (4 * al * T(al) * X(c - S + 1) * (S * vx - n * ux) - al * al * X(c - S + 2) * (n * u - S * v)
                            - 2 * X(c - S) * (S * (-2 * T(1 + al) * vt - al * T(al) * ((c + 1) * v + n * u))
                                              + n * (2 * T(1 + al) * ut + al * T(al) * (m * v + (c + 1) * u))));
        break;
    case 4:
        cx[0] = in * T(al - 1) * (-n * X(1) * vx + (1 - c) * n * v - n * n * u);
        cx[1] = in * T(al - 1) * (c1 * X(1) * vx - n * X(1) * ux + (-m * n + c1 * c1) * v);
        cx[2] = -in * X(c + S) * T(al - 1) * (S * vx + n * ux);
        cx[3] = in * X(c - S) * T(al - 1) * (S * vx - n * ux);
        ct[0] = X(1) * v;
        ct[1] = -in * X(1) * (c1 * v - n * u);
        ct[2] = in * X(c + S) * (n * u + S * v);
        ct[3] = in * X(c - S) * (n * u - S * v);
        break;
    case 5: {
        // uncorrected form lacks the factor t^{alpha-1}
        const Monomial w = uncorrected ? Monomial{} : T(al - 1);
        cx[0] = w * (-n * X(1) * ux - c1 * n * u - m * n * v);
        cx[1] = w * (c1 * X(1) * ux - m * X(1) * vx + (-m * n + c1 * c1) * u);
        cx[2] = -w * X(c + S) * (S * ux + m * vx);
        cx[3] = w * X(c - S) * (S * ux - m * vx);
        ct[0] = n * X(1) * u;
        ct[1] = -X(1) * (c1 * u - m * v);
        ct[2] = X(c + S) * (S * u + m * v);
        ct[3] = -X(c - S) * (S * u - m * v);
        break;
    }
    default:
        throw ParameterError("conserved vector case must be 1..5");
    }
}

}  // namespace

ConservedVector conserved_vector(int case_id, const std::array<double, 4>& k, const Example31Params& p, Order alpha,
                                 Transcription tr)
{
    validate(p);
    ConservedVector cv{SystemId::example31, case_id, k, {}, {}};
    example31_case(case_id, p.a, p.b, alpha.value(), tr == Transcription::uncorrected, cv.ct_parts, cv.cx_parts);
    return cv;
}

ConservedVector conserved_vector(int case_id, const std::array<double, 4>& k, const Eq3Params& p, Order alpha,
                                 Transcription tr)
{
    validate(p);
    ConservedVector cv{SystemId::eq3, case_id, k, {}, {}};
    eq3_case(case_id, p.c, p.m, p.n, alpha.value(), tr == Transcription::uncorrected, cv.ct_parts, cv.cx_parts);
    return cv;
}

double Divergence::scaled() const
{
    if (scale > 0)
        return std::abs(value) / scale;
    return value == 0 ? 0 : INFINITY;
}

Divergence divergence_detail(const ConservedVector& cv, const SolutionPair& sol, const EvalPoint& p)
{
    check_interior(p);
    const double hx = divergence_step * std::max(1.0, p.x);
    const double ht = divergence_step * std::max(1.0, p.t);
    if (p.x - 2 * hx <= 0 || p.t - 2 * ht <= 0)
        throw DomainError("divergence stencil leaves the domain");

    const Expr ct = cv.ct(), cx = cv.cx();
    auto Ct = [&](double x, double t) { return ct.evaluate(derivatives(sol, {x, t}), x, t); };
    auto Cx = [&](double x, double t) { return cx.evaluate(derivatives(sol, {x, t}), x, t); };

    const double dt = (-Ct(p.x, p.t + 2 * ht) + 8 * Ct(p.x, p.t + ht) - 8 * Ct(p.x, p.t - ht) + Ct(p.x, p.t - 2 * ht))
                      / (12 * ht);
    const double dx = (-Cx(p.x + 2 * hx, p.t) + 8 * Cx(p.x + hx, p.t) - 8 * Cx(p.x - hx, p.t) + Cx(p.x - 2 * hx, p.t))
                      / (12 * hx);

    const SolutionDerivatives d = derivatives(sol, p);
    const double scale =
        std::max({ct.magnitude(d, p.x, p.t), cx.magnitude(d, p.x, p.t), std::abs(dt), std::abs(dx)});
    return {dt + dx, scale};
}

double divergence(const ConservedVector& cv, const SolutionPair& sol, const EvalPoint& p)
{
    return divergence_detail(cv, sol, p).value;
}

}  // namespace confract
