#include "syllogist/oracle.hpp"

#include <algorithm>
#include <cctype>

#include "syllogist/errors.hpp"

namespace syllogist {

int VennModel::total() const {
    int t = 0;
    for (int v : atoms) t += v;
    return t;
}

int VennModel::count(std::uint8_t mask) const {
    int t = 0;
    for (int m = 0; m < 8; ++m)
        if (mask & (1u << m)) t += atoms[m];
    return t;
}

std::string VennModel::to_string() const {
    static const char* names[8] = {"-", "C", "B", "BC", "A", "AC", "AB", "ABC"};
    std::string s = "{";
    bool first = true;
    for (int m = 7; m >= 0; --m) {
        if (atoms[m] == 0) continue;
        if (!first) s += ", ";
        first = false;
        s += names[m];
        s += "=";
        s += std::to_string(atoms[m]);
    }
    if (first) s += "empty";
    s += "}";
    return s;
}

namespace {

struct ExprParser {
    const std::string& text;
    size_t pos = 0;

    explicit ExprParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    std::uint8_t parse_or() {
        std::uint8_t m = parse_and();
        while (eat('|')) m |= parse_and();
        return m;
    }
    std::uint8_t parse_and() {
        std::uint8_t m = parse_unary();
        while (eat('&')) m &= parse_unary();
        return m;
    }
    std::uint8_t parse_unary() {
        if (eat('~') || eat('!')) return static_cast<std::uint8_t>(~parse_unary());
        return parse_factor();
    }
    std::uint8_t parse_factor() {
        skip_ws();
        if (eat('(')) {
            std::uint8_t m = parse_or();
            if (!eat(')')) raise(errc::syntax_error, "missing ')' in set expression: " + text);
            return m;
        }
        if (pos >= text.size())
            raise(errc::syntax_error, "truncated set expression: " + text);
        char c = text[pos++];
        switch (c) {
        case 'A': case 'a': return atoms_a;
        case 'B': case 'b': return atoms_b;
        case 'C': case 'c': return atoms_c;
        }
        raise(errc::syntax_error, std::string("unexpected '") + c + "' in set expression: " + text);
    }
};

} // namespace

std::uint8_t parse_set_expr(const std::string& text) {
    ExprParser p(text);
    std::uint8_t m = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size())
        raise(errc::syntax_error, "trailing characters in set expression: " + text);
    return m;
}

void enumerate_models(int total_max, bool require_nonempty,
                      const std::function<bool(const VennModel&)>& visit) {
    VennModel model;
    bool stopped = false;

    auto rec = [&](auto&& self, int atom, int budget) -> void {
        if (stopped) return;
        if (atom == 8) {
            if (require_nonempty &&
                (model.count(atoms_a) == 0 || model.count(atoms_b) == 0 ||
                 model.count(atoms_c) == 0))
                return;
            if (!visit(model)) stopped = true;
            return;
        }
        for (int v = 0; v <= budget && !stopped; ++v) {
            model.atoms[atom] = v;
            self(self, atom + 1, budget - v);
        }
        model.atoms[atom] = 0;
    };
    rec(rec, 0, total_max);
}

std::int64_t model_count(int total_max) {
    // C(total_max + 8, 8)
    std::int64_t n = total_max + 8;
    std::int64_t r = 1;
    for (int i = 1; i <= 8; ++i) r = r * (n - 8 + i) / i;
    return r;
}

namespace {

std::uint8_t role_mask(TermRole r) {
    switch (r) {
    case TermRole::Minor: return atoms_a;
    case TermRole::Middle: return atoms_b;
    default: return atoms_c;
    }
}

} // namespace

bool crisp_letter_holds(Letter l, const VennModel& m,
                        std::uint8_t subj, std::uint8_t pred) {
    switch (l) {
    case Letter::A: return m.count(subj & static_cast<std::uint8_t>(~pred)) == 0;
    case Letter::E: return m.count(subj & pred) == 0;
    case Letter::I: return m.count(subj & pred) > 0;
    case Letter::O: return m.count(subj & static_cast<std::uint8_t>(~pred)) > 0;
    }
    return false;
}

MoodCheck mood_valid(const Mood& mood, int total_max) {
    if (total_max < 3)
        raise(errc::domain_error, "mood checking needs total_max >= 3");
    auto shapes = figure_premises(mood.figure);
    std::uint8_t s1 = role_mask(shapes[0].subject), p1 = role_mask(shapes[0].predicate);
    std::uint8_t s2 = role_mask(shapes[1].subject), p2 = role_mask(shapes[1].predicate);

    MoodCheck result{true, std::nullopt};
    enumerate_models(total_max, /*require_nonempty=*/true, [&](const VennModel& m) {
        if (crisp_letter_holds(mood.major, m, s1, p1) &&
            crisp_letter_holds(mood.minor, m, s2, p2) &&
            !crisp_letter_holds(mood.conclusion, m, atoms_a, atoms_c)) {
            result.valid = false;
            result.counterexample = m;
            return false;
        }
        return true;
    });
    return result;
}

ProportionConstraint ProportionConstraint::from_interval(std::uint8_t num, std::uint8_t den,
                                                         const Interval& bounds) {
    ProportionConstraint c;
    c.num_mask = num;
    c.den_mask = den;
    c.lower = rational_from_double(bounds.lower);
    c.upper = rational_from_double(bounds.upper);
    c.lower_open = bounds.lower_open;
    c.upper_open = bounds.upper_open;
    return c;
}

namespace {

using i64 = std::int64_t;

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// One linear inequality sum(coeff_j * x_j) >= bound over the class counts,
// in DFS assignment order.
struct LinearIneq {
    std::vector<i64> coeff;       // per DFS level
    std::vector<i64> suffix_pos;  // max(0, max coeff at levels > j)
    i64 bound = 0;
};

struct RangeSearch {
    int total_max;
    std::vector<LinearIneq> ineqs;
    std::vector<i64> fixed;  // running fixed part per inequality

    // target sums, indexed by DFS level
    std::vector<bool> level_in_tnum;
    std::vector<bool> level_in_tden;
    bool tnum_after(int level) const { return tnum_suffix[level]; }
    bool tden_after(int level) const { return tden_suffix[level]; }
    std::vector<bool> tnum_suffix, tden_suffix;  // any target class at levels >= j

    bool found_admissible = false;
    bool found_defined = false;
    Rational best_min, best_max;

    void run() {
        fixed.assign(ineqs.size(), 0);
        dfs(0, total_max, 0, 0);
    }

    void dfs(int level, int budget, i64 tnum, i64 tden) {
        size_t n_levels = level_in_tnum.size();
        if (level == static_cast<int>(n_levels)) {
            found_admissible = true;
            if (tden > 0) {
                Rational v(tnum, tden);
                if (!found_defined) {
                    best_min = best_max = v;
                    found_defined = true;
                } else {
                    if (v < best_min) best_min = v;
                    if (v > best_max) best_max = v;
                }
            }
            return;
        }

        // Subtree cannot extend [best_min, best_max]: prune.  Bounds ignore
        // the shared-budget coupling between numerator and denominator, so
        // they are outer approximations.
        if (found_defined) {
            i64 dn = tnum_after(level) ? budget : 0;
            i64 dd = tden_after(level) ? budget : 0;
            bool cant_lower, cant_raise;
            // min achievable value >= tnum / (tden + dd)
            cant_lower = (tden + dd > 0) && Rational(tnum, tden + dd) >= best_min;
            if (tden + dd == 0) cant_lower = true;  // never defined below
            // max achievable value <= (tnum + dn) / max(tden, 1)
            if (tden == 0 && dd == 0)
                cant_raise = true;
            else
                cant_raise = Rational(tnum + dn, tden > 0 ? tden : 1) <= best_max;
            if (cant_lower && cant_raise && found_admissible) return;
        }

        i64 xlo = 0, xhi = budget;
        for (size_t i = 0; i < ineqs.size(); ++i) {
            const auto& q = ineqs[i];
            i64 a = q.coeff[level] - q.suffix_pos[level];
            i64 b = q.bound - fixed[i] - static_cast<i64>(budget) * q.suffix_pos[level];
            if (a > 0) {
                if (b > 0) xlo = std::max(xlo, ceil_div(b, a));
            } else if (a < 0) {
                xhi = std::min(xhi, floor_div(b, a) >= 0 ? floor_div(b, a) : -1);
            } else if (b > 0) {
                return;  // infeasible regardless of x
            }
            if (xlo > xhi) return;
        }

        bool in_tn = level_in_tnum[level], in_td = level_in_tden[level];
        for (i64 x = xlo; x <= xhi; ++x) {
            for (size_t i = 0; i < ineqs.size(); ++i) fixed[i] += ineqs[i].coeff[level] * x;
            dfs(level + 1, budget - static_cast<int>(x),
                tnum + (in_tn ? x : 0), tden + (in_td ? x : 0));
            for (size_t i = 0; i < ineqs.size(); ++i) fixed[i] -= ineqs[i].coeff[level] * x;
        }
    }
};

} // namespace

RationalRange attained_range(const std::vector<ProportionConstraint>& constraints,
                             const ProportionTarget& target, int total_max) {
    if (total_max < 1) raise(errc::domain_error, "total_max must be positive");

    // Merge atoms that are indistinguishable to every constraint and to the
    // target; atoms appearing nowhere only pad the universe and are dropped.
    struct ClassInfo {
        std::uint32_t signature;
        bool in_tnum, in_tden;
        std::vector<bool> in_num, in_den;  // per constraint
    };
    std::vector<ClassInfo> classes;
    for (int m = 0; m < 8; ++m) {
        std::uint8_t bit = static_cast<std::uint8_t>(1u << m);
        std::uint32_t sig = 0;
        ClassInfo info;
        info.in_tnum = (target.num_mask & bit) != 0;
        info.in_tden = (target.den_mask & bit) != 0;
        sig = (info.in_tnum ? 1u : 0u) | (info.in_tden ? 2u : 0u);
        int shift = 2;
        for (const auto& c : constraints) {
            bool in_n = (c.num_mask & bit) != 0, in_d = (c.den_mask & bit) != 0;
            info.in_num.push_back(in_n);
            info.in_den.push_back(in_d);
            sig |= (in_n ? 1u : 0u) << ++shift;
            sig |= (in_d ? 1u : 0u) << ++shift;
        }
        if (sig == 0) continue;
        info.signature = sig;
        bool merged = false;
        for (auto& existing : classes)
            if (existing.signature == sig) { merged = true; break; }
        if (!merged) classes.push_back(std::move(info));
    }

    if (classes.empty())
        raise(errc::undefined_proportion, "target denominator is empty in every model");

    // Assignment order: repeatedly take the constraint with the fewest
    // still-unassigned classes so exact checks bind as early as possible.
    std::vector<int> order;
    std::vector<bool> placed(classes.size(), false);
    auto place_all_of = [&](auto&& touches) {
        for (size_t j = 0; j < classes.size(); ++j)
            if (!placed[j] && touches(classes[j])) {
                placed[j] = true;
                order.push_back(static_cast<int>(j));
            }
    };
    while (true) {
        int best = -1, best_missing = 9;
        for (size_t i = 0; i < constraints.size(); ++i) {
            int missing = 0;
            for (size_t j = 0; j < classes.size(); ++j)
                if (!placed[j] && (classes[j].in_num[i] || classes[j].in_den[i])) ++missing;
            if (missing > 0 && missing < best_missing) {
                best_missing = missing;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        place_all_of([&](const ClassInfo& c) { return c.in_num[best] || c.in_den[best]; });
    }
    place_all_of([](const ClassInfo&) { return true; });  // target-only leftovers

    RangeSearch search;
    search.total_max = total_max;
    size_t n = order.size();
    search.level_in_tnum.resize(n);
    search.level_in_tden.resize(n);
    for (size_t l = 0; l < n; ++l) {
        search.level_in_tnum[l] = classes[order[l]].in_tnum;
        search.level_in_tden[l] = classes[order[l]].in_tden;
    }
    search.tnum_suffix.assign(n, false);
    search.tden_suffix.assign(n, false);
    bool accn = false, accd = false;
    for (int l = static_cast<int>(n) - 1; l >= 0; --l) {
        accn = accn || search.level_in_tnum[l];
        accd = accd || search.level_in_tden[l];
        search.tnum_suffix[l] = accn;
        search.tden_suffix[l] = accd;
    }

    auto add_ineq = [&](const std::vector<i64>& coeff, i64 bound) {
        LinearIneq q;
        q.coeff = coeff;
        q.bound = bound;
        q.suffix_pos.assign(n, 0);
        i64 acc = 0;
        for (int l = static_cast<int>(n) - 1; l >= 0; --l) {
            q.suffix_pos[l] = acc;
            acc = std::max(acc, coeff[l]);
        }
        search.ineqs.push_back(std::move(q));
    };

    for (size_t i = 0; i < constraints.size(); ++i) {
        const auto& c = constraints[i];
        std::vector<i64> num_c(n, 0), den_c(n, 0);
        for (size_t l = 0; l < n; ++l) {
            num_c[l] = classes[order[l]].in_num[i] ? 1 : 0;
            den_c[l] = classes[order[l]].in_den[i] ? 1 : 0;
        }
        // den >= 1
        add_ineq(den_c, 1);
        // lower.den * num - lower.num * den >= (strict ? 1 : 0)
        if (c.lower.num > 0 || c.lower_open) {
            std::vector<i64> coeff(n);
            for (size_t l = 0; l < n; ++l)
                coeff[l] = c.lower.den * num_c[l] - c.lower.num * den_c[l];
            add_ineq(coeff, c.lower_open ? 1 : 0);
        }
        // upper.num * den - upper.den * num >= (strict ? 1 : 0)
        std::vector<i64> coeff(n);
        for (size_t l = 0; l < n; ++l)
            coeff[l] = c.upper.num * den_c[l] - c.upper.den * num_c[l];
        add_ineq(coeff, c.upper_open ? 1 : 0);
    }

    search.run();

    if (!search.found_admissible)
        raise(errc::unsatisfiable_premises,
              "no model with total <= " + std::to_string(total_max) + " satisfies the premises");
    if (!search.found_defined)
        raise(errc::undefined_proportion, "target denominator is empty in every admissible model");
    return RationalRange{search.best_min, search.best_max};
}

} // namespace syllogist
