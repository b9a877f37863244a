#include "rkcomp/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

namespace rkcomp {

namespace {

double dot(const Vec& a, const Vec& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

Vec pow_elem(const Vec& v, int k) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = std::pow(v[i], k);
    return r;
}

}  // namespace

void validate(const ButcherTableau& tab) {
    if (tab.s <= 0) throw std::invalid_argument("tableau: stage count must be positive");
    if (tab.A.rows() != tab.s || tab.A.cols() != tab.s)
        throw std::invalid_argument("tableau: A must be s x s");
    if (static_cast<int>(tab.b.size()) != tab.s || static_cast<int>(tab.c.size()) != tab.s)
        throw std::invalid_argument("tableau: b and c must have length s");
    for (int i = 0; i < tab.s; ++i) {
        if (!std::isfinite(tab.b[i]) || !std::isfinite(tab.c[i]))
            throw std::invalid_argument("tableau: non-finite entry in b or c");
        for (int j = 0; j < tab.s; ++j)
            if (!std::isfinite(tab.A(i, j))) throw std::invalid_argument("tableau: non-finite entry in A");
    }
}

double weight_sum(const ButcherTableau& tab) {
    return std::accumulate(tab.b.begin(), tab.b.end(), 0.0);
}

double stage_consistency_deviation(const ButcherTableau& tab) {
    double dev = 0.0;
    for (int i = 0; i < tab.s; ++i) {
        double row = 0.0;
        for (int j = 0; j < tab.s; ++j) row += tab.A(i, j);
        dev = std::max(dev, std::abs(row - tab.c[i]));
    }
    return dev;
}

double max_deviation(const ButcherTableau& lhs, const ButcherTableau& rhs) {
    if (lhs.s != rhs.s) return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (int i = 0; i < lhs.s; ++i) {
        dev = std::max(dev, std::abs(lhs.b[i] - rhs.b[i]));
        dev = std::max(dev, std::abs(lhs.c[i] - rhs.c[i]));
        for (int j = 0; j < lhs.s; ++j) dev = std::max(dev, std::abs(lhs.A(i, j) - rhs.A(i, j)));
    }
    return dev;
}

bool is_symmetric(const ButcherTableau& tab, double tol) {
    if (std::abs(weight_sum(tab) - 1.0) > 1e-12) return false;
    return max_deviation(adjoint(tab), tab) <= tol;
}

SimplifyingResiduals simplifying_residuals(const ButcherTableau& tab, int p) {
    validate(tab);
    if (p < 1) throw std::invalid_argument("simplifying_residuals: p must be >= 1");
    SimplifyingResiduals res;
    res.b.resize(p);
    res.c.resize(p);
    res.d.resize(p);
    for (int k = 1; k <= p; ++k) {
        const Vec ck1 = pow_elem(tab.c, k - 1);
        res.b[k - 1] = std::abs(dot(tab.b, ck1) - 1.0 / k);

        double cmax = 0.0;
        for (int i = 0; i < tab.s; ++i) {
            double acc = 0.0;
            for (int j = 0; j < tab.s; ++j) acc += tab.A(i, j) * ck1[j];
            cmax = std::max(cmax, std::abs(acc - std::pow(tab.c[i], k) / k));
        }
        res.c[k - 1] = cmax;

        double dmax = 0.0;
        for (int j = 0; j < tab.s; ++j) {
            double acc = 0.0;
            for (int i = 0; i < tab.s; ++i) acc += tab.b[i] * ck1[i] * tab.A(i, j);
            dmax = std::max(dmax, std::abs(acc - tab.b[j] * (1.0 - std::pow(tab.c[j], k)) / k));
        }
        res.d[k - 1] = dmax;
    }
    return res;
}

std::array<double, 8> order_conditions_p4(const ButcherTableau& tab) {
    validate(tab);
    const Vec& b = tab.b;
    const Vec& c = tab.c;
    const Vec ac = mat_vec(tab.A, c);
    const Vec c2 = pow_elem(c, 2);
    const Vec ac2 = mat_vec(tab.A, c2);
    const Vec aac = mat_vec(tab.A, ac);
    Vec c_ac(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c_ac[i] = c[i] * ac[i];

    return {
        dot(b, Vec(c.size(), 1.0)) - 1.0,
        dot(b, c) - 1.0 / 2.0,
        dot(b, c2) - 1.0 / 3.0,
        dot(b, ac) - 1.0 / 6.0,
        dot(b, pow_elem(c, 3)) - 1.0 / 4.0,
        dot(b, c_ac) - 1.0 / 8.0,
        dot(b, ac2) - 1.0 / 12.0,
        dot(b, aac) - 1.0 / 24.0,
    };
}

SymplecticityResidual symplecticity_residual(const ButcherTableau& tab) {
    validate(tab);
    SymplecticityResidual res;
    res.M = Matrix(tab.s, tab.s);
    for (int i = 0; i < tab.s; ++i)
        for (int j = 0; j < tab.s; ++j)
            res.M(i, j) = tab.b[i] * tab.A(i, j) + tab.b[j] * tab.A(j, i) - tab.b[i] * tab.b[j];
    res.norm = max_abs(res.M);
    return res;
}

ButcherTableau adjoint(const ButcherTableau& tab) {
    validate(tab);
    if (std::abs(weight_sum(tab) - 1.0) > 1e-12)
        throw std::invalid_argument("adjoint: weights must sum to 1");
    const int s = tab.s;
    ButcherTableau adj;
    adj.s = s;
    adj.A = Matrix(s, s);
    adj.b.resize(s);
    adj.c.resize(s);
    for (int i = 0; i < s; ++i) {
        adj.b[i] = tab.b[s - 1 - i];
        adj.c[i] = 1.0 - tab.c[s - 1 - i];
        for (int j = 0; j < s; ++j) adj.A(i, j) = tab.b[s - 1 - j] - tab.A(s - 1 - i, s - 1 - j);
    }
    return adj;
}

ButcherTableau compose(const ButcherTableau& first, const ButcherTableau& second,
                       double theta1, double theta2) {
    validate(first);
    validate(second);
    if (std::abs(theta1 + theta2 - 1.0) > 1e-14)
        throw std::invalid_argument("compose: step fractions must sum to 1");
    if (theta1 <= 0.0 || theta2 <= 0.0)
        throw std::invalid_argument("compose: step fractions must be positive");
    const int s1 = first.s, s2 = second.s;
    ButcherTableau out;
    out.s = s1 + s2;
    out.A = Matrix(out.s, out.s);
    out.b.resize(out.s);
    out.c.resize(out.s);
    for (int i = 0; i < s1; ++i) {
        out.b[i] = theta1 * first.b[i];
        out.c[i] = theta1 * first.c[i];
        for (int j = 0; j < s1; ++j) out.A(i, j) = theta1 * first.A(i, j);
    }
    for (int i = 0; i < s2; ++i) {
        out.b[s1 + i] = theta2 * second.b[i];
        out.c[s1 + i] = theta1 + theta2 * second.c[i];
        for (int j = 0; j < s1; ++j) out.A(s1 + i, j) = theta1 * first.b[j];
        for (int j = 0; j < s2; ++j) out.A(s1 + i, s1 + j) = theta2 * second.A(i, j);
    }
    return out;
}

ButcherTableau s_reduce(const ButcherTableau& tab, double tol) {
    validate(tab);
    if (tol <= 0.0) throw std::invalid_argument("s_reduce: tolerance must be positive");
    const int s = tab.s;

    // Start the partition from equal abscissae and refine on the per-class
    // row sums until stable.
    std::vector<int> cls(s, -1);
    int n_cls = 0;
    for (int i = 0; i < s; ++i) {
        for (int k = 0; k < i; ++k) {
            if (cls[k] >= 0 && std::abs(tab.c[i] - tab.c[k]) <= tol && cls[i] < 0) cls[i] = cls[k];
        }
        if (cls[i] < 0) cls[i] = n_cls++;
    }

    for (bool changed = true; changed;) {
        changed = false;
        // Row signature: sums of a_ik over each current class.
        std::vector<std::vector<double>> sig(s, std::vector<double>(n_cls, 0.0));
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < s; ++k) sig[i][cls[k]] += tab.A(i, k);

        std::vector<int> next(s, -1);
        int next_n = 0;
        for (int i = 0; i < s; ++i) {
            for (int k = 0; k < i && next[i] < 0; ++k) {
                if (cls[k] != cls[i]) continue;
                bool same = true;
                for (int m = 0; m < n_cls && same; ++m)
                    if (std::abs(sig[i][m] - sig[k][m]) > tol) same = false;
                if (same) next[i] = next[k];
            }
            if (next[i] < 0) next[i] = next_n++;
        }
        if (next_n != n_cls) changed = true;
        cls = std::move(next);
        n_cls = next_n;
    }

    if (n_cls == s) return tab;

    // One stage per class, ordered by first occurrence; columns are summed
    // over the class, weights add, the representative supplies the row.
    std::vector<int> rep(n_cls, -1);
    for (int i = 0; i < s; ++i)
        if (rep[cls[i]] < 0) rep[cls[i]] = i;

    ButcherTableau red;
    red.s = n_cls;
    red.A = Matrix(n_cls, n_cls);
    red.b.assign(n_cls, 0.0);
    red.c.resize(n_cls);
    for (int i = 0; i < s; ++i) red.b[cls[i]] += tab.b[i];
    for (int m = 0; m < n_cls; ++m) {
        red.c[m] = tab.c[rep[m]];
        for (int k = 0; k < s; ++k) red.A(m, cls[k]) += tab.A(rep[m], k);
    }
    return red;
}

std::complex<double> stability_function(const ButcherTableau& tab, std::complex<double> z) {
    validate(tab);
    using cd = std::complex<double>;
    const int s = tab.s;
    BasicMatrix<cd> m(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) m(i, j) = (i == j ? cd(1.0) : cd(0.0)) - z * tab.A(i, j);
    const std::vector<cd> x = lu_solve(std::move(m), std::vector<cd>(s, cd(1.0)), 1e-300);
    cd acc(0.0);
    for (int i = 0; i < s; ++i) acc += tab.b[i] * x[i];
    return 1.0 + z * acc;
}

namespace {

std::vector<double> parse_line(std::istream& in, std::size_t expect, int line_no) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("tableau parse: unexpected end of input at line " +
                                 std::to_string(line_no));
    std::istringstream ss(line);
    std::vector<double> vals;
    double v;
    while (ss >> v) vals.push_back(v);
    if (!ss.eof())
        throw std::runtime_error("tableau parse: invalid token on line " + std::to_string(line_no));
    if (vals.size() != expect)
        throw std::runtime_error("tableau parse: expected " + std::to_string(expect) +
                                 " values on line " + std::to_string(line_no) + ", got " +
                                 std::to_string(vals.size()));
    return vals;
}

}  // namespace

ButcherTableau read_tableau(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("tableau parse: empty input");
    std::istringstream head(line);
    long s_long = 0;
    if (!(head >> s_long) || s_long < 1 || s_long > 1000)
        throw std::runtime_error("tableau parse: line 1 must hold the stage count");
    std::string rest;
    if (head >> rest) throw std::runtime_error("tableau parse: trailing content on line 1");
    const int s = static_cast<int>(s_long);

    ButcherTableau tab;
    tab.s = s;
    tab.c = parse_line(in, s, 2);
    tab.A = Matrix(s, s);
    for (int i = 0; i < s; ++i) {
        const Vec row = parse_line(in, s, 3 + i);
        for (int j = 0; j < s; ++j) tab.A(i, j) = row[j];
    }
    tab.b = parse_line(in, s, 3 + s);
    validate(tab);
    return tab;
}

ButcherTableau load_tableau(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tableau file: " + path);
    return read_tableau(in);
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_row(std::ostream& out, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << fmt17(v[i]);
    }
    out << '\n';
}

}  // namespace

void write_tableau(std::ostream& out, const ButcherTableau& tab) {
    validate(tab);
    out << tab.s << '\n';
    write_row(out, tab.c);
    for (int i = 0; i < tab.s; ++i) {
        Vec row(tab.s);
        for (int j = 0; j < tab.s; ++j) row[j] = tab.A(i, j);
        write_row(out, row);
    }
    write_row(out, tab.b);
}

void save_tableau(const std::string& path, const ButcherTableau& tab) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tableau file: " + path);
    write_tableau(out, tab);
}

namespace {

ButcherTableau make(int s, std::initializer_list<double> a, std::initializer_list<double> b,
                    std::initializer_list<double> c) {
    ButcherTableau tab;
    tab.s = s;
    tab.A = Matrix(s, s);
    auto it = a.begin();
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) tab.A(i, j) = *it++;
    tab.b = Vec(b);
    tab.c = Vec(c);
    return tab;
}

}  // namespace

ButcherTableau explicit_euler() { return make(1, {0.0}, {1.0}, {0.0}); }

ButcherTableau implicit_euler() { return make(1, {1.0}, {1.0}, {1.0}); }

ButcherTableau implicit_midpoint() { return make(1, {0.5}, {1.0}, {0.5}); }

ButcherTableau trapezoidal() {
    return make(2, {0.0, 0.0, 0.5, 0.5}, {0.5, 0.5}, {0.0, 1.0});
}

ButcherTableau classical_rk4() {
    return make(4,
                {0.0, 0.0, 0.0, 0.0,
                 0.5, 0.0, 0.0, 0.0,
                 0.0, 0.5, 0.0, 0.0,
                 0.0, 0.0, 1.0, 0.0},
                {1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6}, {0.0, 0.5, 0.5, 1.0});
}

}  // namespace rkcomp
