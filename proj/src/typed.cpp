#include "dtree/typed.hpp"

#include <optional>
#include <sstream>

#include "dtree/errors.hpp"

namespace dtree {

namespace {

void require_square(const TypeMatrix& g) {
    for (const auto& row : g) {
        if (row.size() != g.size()) {
            throw DimensionMismatch("type matrix is not square");
        }
    }
}

// Appends one "c*t^k" term, folding away zero coefficients, unit
// coefficients and the power for k <= 1.
void append_term(std::ostringstream& out, bool& first, const Int& c, std::size_t k) {
    if (c == 0) return;
    Int magnitude = abs(c);
    if (first) {
        if (c < 0) out << "-";
        first = false;
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || magnitude != 1) out << magnitude.str();
    if (k >= 1 && magnitude != 1) out << "*";
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
}

std::string polynomial_string(const std::vector<Int>& coefficients) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        append_term(out, first, coefficients[k], k);
    }
    return first ? "0" : out.str();
}

} // namespace

TypeMatrix derive_type_matrix(const GenerativeSystem& system,
                              const TypeAssignment& assignment, std::size_t depth) {
    if (depth < 1) throw DomainError("type derivation needs depth >= 1");
    const std::size_t v = assignment.class_count;
    std::vector<std::optional<std::vector<Int>>> rows(v);
    std::vector<NodeLabel> witnesses(v, system.root);

    auto levels = enumerate_levels(system, depth - 1);
    for (const auto& level : levels) {
        for (const NodeLabel& x : level) {
            std::size_t i = assignment.classify(x);
            std::vector<Int> counts(v, 0);
            for (const NodeLabel& child : system.expand(x)) {
                ++counts[assignment.classify(child)];
            }
            if (!rows[i]) {
                rows[i] = std::move(counts);
                witnesses[i] = x;
            } else if (*rows[i] != counts) {
                throw NotTyped("class " + assignment.class_names[i] + " nodes " +
                                   to_string(witnesses[i]) + " and " + to_string(x) +
                                   " disagree on their children's classes",
                               to_string(witnesses[i]), to_string(x));
            }
        }
    }
    TypeMatrix g;
    for (std::size_t i = 0; i < v; ++i) {
        if (!rows[i]) {
            throw ClassUnobserved("no node of class " + assignment.class_names[i] +
                                      " was expanded within " + std::to_string(depth) +
                                      " levels",
                                  i);
        }
        g.push_back(std::move(*rows[i]));
    }
    return g;
}

std::vector<Int> char_polynomial(const TypeMatrix& g) {
    require_square(g);
    const std::size_t n = g.size();
    std::vector<Int> c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return c;

    // Faddeev-LeVerrier: M_{k} = A M_{k-1} + c_{n-k+1} I, c_{n-k} read off
    // the trace. All divisions are exact over the integers.
    TypeMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        TypeMatrix am(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                for (std::size_t j = 0; j < n; ++j) am[i][j] += g[i][l] * m[l][j];
            }
        }
        Int trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
        c[n - k] = -trace / Int(k);
        m = std::move(am);
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k];
    }
    return c;
}

std::vector<Int> recurrence_from_char_poly(const std::vector<Int>& poly) {
    if (poly.empty() || poly.back() != 1) {
        throw DomainError("polynomial is not monic");
    }
    const std::size_t m = poly.size() - 1;
    std::vector<Int> h(m);
    for (std::size_t i = 1; i <= m; ++i) h[i - 1] = -poly[m - i];
    return h;
}

Distribution step_distribution(const Distribution& pi, const TypeMatrix& g) {
    require_square(g);
    if (pi.size() != g.size()) {
        throw DimensionMismatch("distribution has " + std::to_string(pi.size()) +
                                " entries, matrix is " + std::to_string(g.size()) + "x" +
                                std::to_string(g.size()));
    }
    Distribution next(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) next[j] += pi[i] * g[i][j];
    }
    return next;
}

std::vector<Int> level_counts_matrix(const TypeMatrix& g, const Distribution& pi0,
                                     std::size_t depth) {
    std::vector<Int> counts;
    Distribution pi = pi0;
    for (std::size_t m = 0;; ++m) {
        Int total = 0;
        for (const Int& entry : pi) total += entry;
        counts.push_back(total);
        if (m == depth) break;
        pi = step_distribution(pi, g);
    }
    return counts;
}

bool recurrence_check(const std::vector<Int>& seq, const std::vector<Int>& h) {
    for (std::size_t n = h.size(); n < seq.size(); ++n) {
        Int expected = 0;
        for (std::size_t i = 1; i <= h.size(); ++i) expected += h[i - 1] * seq[n - i];
        if (seq[n] != expected) return false;
    }
    return true;
}

std::vector<Int> recurrence_terms(const LinearRecurrence& rec, std::size_t n_terms) {
    std::vector<Int> seq = rec.initial;
    seq.resize(std::min(n_terms, seq.size()));
    while (seq.size() < n_terms) {
        Int next = 0;
        for (std::size_t i = 1; i <= rec.coefficients.size(); ++i) {
            next += rec.coefficients[i - 1] * seq[seq.size() - i];
        }
        seq.push_back(next);
    }
    return seq;
}

RationalGeneratingFunction generating_function(const std::vector<Int>& h,
                                               const std::vector<Int>& initial) {
    if (h.size() != initial.size()) {
        throw DimensionMismatch("need exactly one initial term per coefficient");
    }
    RationalGeneratingFunction gf;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        Int u = initial[i];
        for (std::size_t j = 1; j <= i; ++j) u -= h[j - 1] * initial[i - j];
        gf.numerator.push_back(u);
    }
    // Canonical form drops trailing zero terms, keeping the constant.
    while (gf.numerator.size() > 1 && gf.numerator.back() == 0) {
        gf.numerator.pop_back();
    }
    gf.denominator.push_back(1);
    for (const Int& coefficient : h) gf.denominator.push_back(-coefficient);
    return gf;
}

std::vector<Int> gf_series(const RationalGeneratingFunction& gf, std::size_t n_terms) {
    if (gf.denominator.empty() || gf.denominator.front() != 1) {
        throw DomainError("generating-function denominator must have constant term 1");
    }
    std::vector<Int> series;
    for (std::size_t n = 0; n < n_terms; ++n) {
        Int term = n < gf.numerator.size() ? gf.numerator[n] : Int(0);
        for (std::size_t k = 1; k < gf.denominator.size() && k <= n; ++k) {
            term -= gf.denominator[k] * series[n - k];
        }
        series.push_back(term);
    }
    return series;
}

std::string to_string(const RationalGeneratingFunction& gf) {
    auto wrapped = [](std::string poly) {
        if (poly.find(' ') == std::string::npos && poly[0] != '-') return poly;
        return "(" + poly + ")";
    };
    return wrapped(polynomial_string(gf.numerator)) + "/" +
           wrapped(polynomial_string(gf.denominator));
}

} // namespace dtree
