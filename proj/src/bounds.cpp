#include "hyperpath/bounds.hpp"

#include "hyperpath/combinatorics.hpp"
#include "hyperpath/enumeration.hpp"
#include "hyperpath/poset.hpp"

#include <boost/math/constants/constants.hpp>

#include <functional>
#include <map>
#include <optional>
#include <tuple>

namespace hyperpath {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::skipped: return "SKIPPED";
        case Verdict::undecided: return "UNDECIDED";
        case Verdict::rate: return "RATE";
    }
    return "SKIPPED";
}

nlohmann::json suite_json(const std::vector<SuiteEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json j{{"name", e.name},   {"paper_anchor", e.anchor}, {"lhs", e.lhs},
                         {"rhs", e.rhs},     {"verdict", to_string(e.verdict)}, {"params", e.params}};
        if (!e.note.empty()) j["note"] = e.note;
        out.push_back(std::move(j));
    }
    return out;
}

namespace {

std::string approx(const Interval& x) {
    const Real mid = (x.lo + x.hi) / 2;
    return mid.str(12);
}

Verdict at_least(Order o) {
    switch (o) {
        case Order::greater:
        case Order::equal: return Verdict::pass;
        case Order::less: return Verdict::fail;
        case Order::undecided: return Verdict::undecided;
    }
    return Verdict::undecided;
}

Verdict holds(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

BigInt pow_big(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

BigInt pow2(unsigned e) { return BigInt(1) << e; }

BigInt ipow(long base, unsigned e) { return pow_big(BigInt(base), e); }

// log2 v >= c * n^e / sqrt(s), decided for an exact integer v >= 1.
Verdict log2_at_least(const BigInt& v, const BigRational& c, const BigInt& ne, unsigned s, std::string& rhs) {
    const Interval r = Interval::exact(c * BigRational(ne)) / sqrt(Interval::exact(BigRational(s)));
    rhs = "2^(" + approx(r) + ")";
    const BigInt floor_log = BigInt(bit_length(v)) - 1;
    // floor(log2 v) >= r  <=>  s * floor^2 >= c^2 n^(2e)
    if (floor_log >= 0 && BigRational(s) * BigRational(floor_log * floor_log) >= c * c * BigRational(ne * ne))
        return Verdict::pass;
    return at_least(compare(log2(v), r));
}

class Suite {
public:
    explicit Suite(const SuiteConfig& cfg) : cfg_(cfg) {}

    std::vector<SuiteEntry> run() {
        crude_upper();
        midrank();
        antichain_lower();
        partition_lower();
        n3_sandwich();
        rho_entries();
        young_entries();
        tower_difference();
        if (cfg_.run_search) search_entries();
        rates();
        return std::move(out_);
    }

private:
    // P_d(n): partitions of dimension d, i.e. down-sets of [n]^{d+1}.
    std::optional<BigInt> P(int d, int n) {
        const auto key = std::make_pair(d, n);
        if (auto it = p_cache_.find(key); it != p_cache_.end()) return it->second;
        std::optional<BigInt> v;
        try {
            v = count_downsets(GridBox(n, d + 1), cfg_.budget);
        } catch (const BudgetExceeded&) {
            v.reset();
        }
        p_cache_[key] = v;
        return v;
    }

    std::optional<BigInt> rho(int k, int d, int n) {
        const auto key = std::make_tuple(k, d, n);
        if (auto it = rho_cache_.find(key); it != rho_cache_.end()) return it->second;
        std::optional<BigInt> v;
        if (k == 2) {
            v = ipow(n, static_cast<unsigned>(d));
        } else if (k == 3) {
            v = P(d - 1, n);
        } else {
            // the order-(k-1) universe is materialized, so its size must fit
            const auto below = rho(k - 1, d, n);
            if (below && *below <= cfg_.budget.max_entries) {
                try {
                    v = count_rho(k, GridBox(n, d), cfg_.budget);
                } catch (const BudgetExceeded&) {
                    v.reset();
                }
            }
        }
        rho_cache_[key] = v;
        return v;
    }

    void add(std::string name, std::string anchor, std::string lhs, std::string rhs, Verdict v,
             nlohmann::json params, std::string note = {}) {
        out_.push_back(SuiteEntry{std::move(name), std::move(anchor), std::move(lhs), std::move(rhs), v,
                                  std::move(params), std::move(note)});
    }

    void skip(std::string name, std::string anchor, nlohmann::json params, std::string why) {
        add(std::move(name), std::move(anchor), "", "", Verdict::skipped, std::move(params), std::move(why));
    }

    void crude_upper() {
        const std::string anchor = "P_d(n) <= binom(2n,n)^(n^(d-1)) <= 2^(2n^d)";
        for (int d = 1; d <= cfg_.max_d; ++d)
            for (int n = 1; n <= cfg_.max_n; ++n) {
                const nlohmann::json params{{"d", d}, {"n", n}};
                const auto p = P(d, n);
                const auto lines = static_cast<unsigned>(ipow(n, static_cast<unsigned>(d - 1)));
                const BigInt mid = pow_big(p1_closed(static_cast<unsigned>(n)), lines);
                const BigInt top = pow2(2u * static_cast<unsigned>(ipow(n, static_cast<unsigned>(d))));
                if (!p) {
                    add("crude_upper_outer", anchor, "binom(2n,n)^(n^(d-1)) has " + std::to_string(bit_length(mid)) + " bits",
                        "2^(2n^d)", holds(mid <= top), params, "P_d(n) beyond the work budget; outer inequality only");
                    continue;
                }
                add("crude_upper", anchor, to_decimal(*p),
                    "binom(2n,n)^(n^(d-1)) with " + std::to_string(bit_length(mid)) + " bits",
                    holds(*p <= mid && mid <= top), params);
            }
    }

    void midrank() {
        const std::string anchor = "M_{d,n} = max_k S_n(k,d) >= (2/3) n^(d-1)/sqrt(d)";
        for (int d = 1; d <= cfg_.max_d; ++d)
            for (int n = 1; n <= cfg_.max_n; ++n) {
                const auto [k, m] = middle_max(n, d);
                const BigInt ne = ipow(n, static_cast<unsigned>(d - 1));
                // M >= (2/3) n^(d-1) / sqrt(d)  <=>  9 d M^2 >= 4 n^(2(d-1))
                const bool ok = 9 * d * m * m >= 4 * ne * ne;
                const Interval r = Interval::exact(BigRational(2 * ne, 3)) / sqrt(Interval::exact(BigRational(d)));
                add("midrank_lemma", anchor, to_decimal(m), approx(r), holds(ok),
                    {{"d", d}, {"n", n}, {"argmax_k", k}});
            }
    }

    void antichain_lower() {
        const std::string anchor = "P_{d-1}(n) >= 2^(M_{d,n})";
        for (int d = 1; d <= cfg_.max_d + 1; ++d)
            for (int n = 1; n <= cfg_.max_n; ++n) {
                const nlohmann::json params{{"d", d}, {"n", n}};
                const auto p = P(d - 1, n);
                const auto m = middle_max(n, d).second;
                if (!p) {
                    skip("antichain_lower", anchor, params, "P_{d-1}(n) beyond the work budget");
                    continue;
                }
                const bool ok = m < 1 << 20 ? *p >= pow2(m.convert_to<unsigned>()) : false;
                add("antichain_lower", anchor, to_decimal(*p), "2^" + to_decimal(m), holds(ok), params);
            }
    }

    void partition_lower() {
        const std::string anchor = "P_d(n) >= 2^((2/3) n^d / sqrt(d+1))";
        for (int d = 1; d <= cfg_.max_d; ++d)
            for (int n = 1; n <= cfg_.max_n; ++n) {
                const nlohmann::json params{{"d", d}, {"n", n}};
                const auto p = P(d, n);
                if (!p) {
                    skip("partition_lower", anchor, params, "P_d(n) beyond the work budget");
                    continue;
                }
                std::string rhs;
                const Verdict v = log2_at_least(*p, BigRational(2, 3), ipow(n, static_cast<unsigned>(d)),
                                                static_cast<unsigned>(d + 1), rhs);
                add("partition_lower", anchor, to_decimal(*p), rhs, v, params);
            }
    }

    void n3_sandwich() {
        const std::string lower = "2^((2/3) n^(q-1)/sqrt(q)) <= N_3(q,n), N_3(q,n) = P_{q-1}(n)+1";
        const std::string upper = "N_3(q,n) <= 2^(2n^(q-1)), N_3(q,n) = P_{q-1}(n)+1";
        for (int q = 2; q <= cfg_.max_d + 1; ++q)
            for (int n = 2; n <= cfg_.max_n; ++n) {
                const nlohmann::json params{{"q", q}, {"n", n}};
                const auto p = P(q - 1, n);
                if (!p) {
                    skip("n3_sandwich_lower", lower, params, "P_{q-1}(n) beyond the work budget");
                    skip("n3_sandwich_upper", upper, params, "P_{q-1}(n) beyond the work budget");
                    continue;
                }
                const BigInt n3 = *p + 1;
                const BigInt ne = ipow(n, static_cast<unsigned>(q - 1));
                std::string rhs;
                const Verdict v = log2_at_least(n3, BigRational(2, 3), ne, static_cast<unsigned>(q), rhs);
                add("n3_sandwich_lower", lower, to_decimal(n3), rhs, v, params);
                const BigInt top = pow2(static_cast<unsigned>(2 * ne));
                add("n3_sandwich_upper", upper, to_decimal(n3), "2^" + to_decimal(BigInt(2 * ne)), holds(n3 <= top), params);
            }
    }

    void rho_entries() {
        const std::string note_char = "N_k(q,n) evaluated as rho_{k,q}(n)+1";
        for (int d = 2; d <= cfg_.max_d; ++d)
            for (int n = 2; n <= cfg_.max_n; ++n)
                for (int k = 2; k <= cfg_.max_k; ++k) {
                    const nlohmann::json params{{"k", k}, {"d", d}, {"n", n}};
                    const auto r = rho(k, d, n);
                    if (!r) {
                        skip("rho_value", "rho_{k,d}(n) = |P^k_d[n]|", params, "universe beyond the work budget");
                        continue;
                    }
                    if (k == 2) {
                        add("rho_identity", "rho_{2,d}(n) = n^d", to_decimal(*r), to_decimal(ipow(n, static_cast<unsigned>(d))),
                            holds(*r == ipow(n, static_cast<unsigned>(d))), params);
                        continue;
                    }
                    const auto r1 = rho(k - 1, d, n);
                    if (k == 3) {
                        if (const auto p = P(d - 1, n)) {
                            // second, independent evaluation through the generic order-ideal counter
                            try {
                                const BigInt generic = grid_poset(GridBox(n, d)).count_ideals(cfg_.budget);
                                add("rho_identity", "rho_{3,d}(n) = P_{d-1}(n)", to_decimal(generic), to_decimal(*p),
                                    holds(generic == *p), params);
                            } catch (const BudgetExceeded&) {
                                skip("rho_identity", "rho_{3,d}(n) = P_{d-1}(n)", params,
                                     "order-ideal count beyond the work budget");
                            }
                        }
                    }
                    if (r1 && *r1 < (1 << 20)) {
                        add("rho_doubling", "rho_{k,d}(n) <= 2^(rho_{k-1,d}(n))", to_decimal(*r),
                            "2^" + to_decimal(*r1), holds(*r <= pow2(r1->convert_to<unsigned>())), params);
                    }
                    if (d == 2) {
                        const Order o = tower_compare(tower(1, BigRational(*r)), tower(k - 1, BigRational(2 * n)));
                        add("rho_tower_line", "rho_k(n) <= t_{k-1}(2n)", to_decimal(*r), tower(k - 1, BigRational(2 * n)).str(),
                            at_least(flip_order(o)), params);
                    }
                    if (const auto p = P(d - 1, n)) {
                        const TowerScalar t = tower(k - 2, BigRational(*p));
                        const Order o = tower_compare(tower(1, BigRational(*r)), t);
                        add("rho_tower_partition", "rho_{k,d}(n) <= t_{k-2}(P_{d-1}(n))", to_decimal(*r), t.str(),
                            at_least(flip_order(o)), params);
                        const BigInt nk = *r + 1;
                        const TowerScalar n3 = tower(k - 2, BigRational(*p + 1));
                        add("transform_upper", "N_k(q,n) <= t_{k-2}(N_3(q,n))", to_decimal(nk), n3.str(),
                            at_least(flip_order(tower_compare(tower(1, BigRational(nk)), n3))),
                            {{"k", k}, {"q", d}, {"n", n}}, note_char);
                        transform_recursive(k, d, n, *r, *p, note_char);
                    }
                    if (k >= 4) {
                        const auto r2 = rho(k - 2, d, n);
                        if (r1 && r2) recursion(k, d, n, *r, *r1, *r2, note_char);
                    }
                }
    }

    static Order flip_order(Order o) {
        if (o == Order::less) return Order::greater;
        if (o == Order::greater) return Order::less;
        return o;
    }

    void transform_recursive(int k, int q, int n, const BigInt& r, const BigInt& p, const std::string& note) {
        if (k < 4) return;
        const std::string anchor = "N_k(q,n) <= N_{k-2}(N_3(q,n)-1, 2)";
        const nlohmann::json params{{"k", k}, {"q", q}, {"n", n}};
        const BigInt nk = r + 1;
        std::optional<BigInt> rhs;
        if (k == 4) {
            // N_2(Q,2) = 2^Q + 1
            if (p < (1 << 20)) rhs = pow2(p.convert_to<unsigned>()) + 1;
        } else {
            if (p <= 16) {
                const int Q = p.convert_to<int>();
                if (auto v = rho(k - 2, Q, 2)) rhs = *v + 1;
            }
        }
        if (!rhs) {
            skip("transform_recursive", anchor, params, "right-hand side beyond the work budget");
            return;
        }
        add("transform_recursive", anchor, to_decimal(nk), to_decimal(*rhs), holds(nk <= *rhs), params, note);
    }

    void recursion(int k, int d, int n, const BigInt& r, const BigInt& r1, const BigInt& r2, const std::string& note) {
        const nlohmann::json params{{"k", k}, {"d", d}, {"n", n}};
        // a >= 2^(p/q)  <=>  a^q >= 2^p
        auto decide = [&](const BigInt& a, const BigInt& p, const BigInt& q) {
            if (q < 4096 && p < (1 << 22) && bit_length(a) * q.convert_to<std::size_t>() < (1u << 24))
                return holds(pow_big(a, q.convert_to<unsigned>()) >= pow2(p.convert_to<unsigned>()));
            return at_least(compare(log2(a) * Interval::exact(BigRational(q)), Interval::exact(BigRational(p))));
        };
        auto shown = [](const BigInt& p, const BigInt& q) {
            return "2^(" + to_decimal(p) + "/" + to_decimal(q) + ") ~ 2^" + approx(Interval::exact(BigRational(p, q)));
        };
        add("rho_recursion", "rho_{k,d}(n) >= 2^((rho_{k-1,d}(n)+1)/(rho_{k-2,d}(n)+1))", to_decimal(r),
            shown(r1 + 1, r2 + 1), decide(r, r1 + 1, r2 + 1), params);
        add("ramsey_recursion", "N_k(q,n) >= 2^(N_{k-1}(q,n)/N_{k-2}(q,n))", to_decimal(BigInt(r + 1)), shown(r1 + 1, r2 + 1),
            decide(r + 1, r1 + 1, r2 + 1), {{"k", k}, {"q", d}, {"n", n}}, note);
    }

    void young_entries() {
        for (int n = 1; n <= std::max(cfg_.max_n, 8); ++n) {
            const RankProfile prof = lnn_rank_sizes(n);
            const BigInt m = lnn_max(n);
            const BigInt total = prof.total();
            add("young_midrank_naive", "M(n) >= |L(n,n)|/(n^2+1)", to_decimal(m),
                to_decimal(BigRational(total, n * n + 1)), holds(m * (n * n + 1) >= total),
                {{"n", n}});
            if (n >= 2 && n <= cfg_.max_n) {
                const auto r = rho(4, 2, n);
                if (!r) {
                    skip("n4_antichain_lower", "N_4(2,n) >= 2^(M(n))", {{"n", n}}, "rho_4(n) beyond the work budget");
                    continue;
                }
                const bool ok = m < (1 << 20) && *r + 1 >= pow2(m.convert_to<unsigned>());
                add("n4_antichain_lower", "N_4(2,n) >= 2^(M(n))", to_decimal(BigInt(*r + 1)), "2^" + to_decimal(m), holds(ok),
                    {{"n", n}}, "N_4(2,n) evaluated as rho_4(n)+1");
            }
        }
    }

    void tower_difference() {
        const std::string anchor = "t_k(a) - t_k(b) >= t_k(a - 2^-(k-2)) for a >= b+1, a >= 3";
        const std::vector<BigRational> as{3, BigRational(7, 2), 4, BigRational(9, 2), 5};
        const std::vector<BigRational> offsets{1, BigRational(3, 2), 2, BigRational(5, 2)};
        for (int k = 2; k <= 4; ++k)
            for (const auto& a : as)
                for (const auto& off : offsets) {
                    const BigRational b = a - off;
                    if (b <= 0) continue;
                    const nlohmann::json params{{"k", k}, {"a", to_decimal(a)}, {"b", to_decimal(b)}};
                    const BigRational shift = BigRational(1, BigInt(1) << (k - 2));
                    if (k == 2) {
                        // 2^a - 2^b >= 2^(a-1)  <=>  2^(a-1) >= 2^b  <=>  a - 1 >= b
                        add("tower_difference", anchor, "2^" + to_decimal(a) + " - 2^" + to_decimal(b),
                            "2^" + to_decimal(a - 1), holds(a - 1 >= b), params);
                        continue;
                    }
                    // log^(k-1) of the difference: u + log2(1 - 2^(v-u)) with
                    // u = t_{k-1}(a), v = t_{k-1}(b), then k-2 further logarithms.
                    Interval u = Interval::exact(a);
                    Interval v = Interval::exact(b);
                    for (int i = 1; i < k - 1; ++i) {
                        u = exp2(u);
                        v = exp2(v);
                    }
                    Interval one = Interval::exact(1);
                    Interval lhs = u + log2(one - exp2(v - u));
                    for (int i = 0; i < k - 2; ++i) lhs = log2(lhs);
                    const Interval rhs = Interval::exact(a - shift);
                    add("tower_difference", anchor, "log^(" + std::to_string(k - 1) + ") lhs = " + approx(lhs),
                        "a - 2^-(k-2) = " + to_decimal(a - shift), at_least(compare(lhs, rhs)), params);
                }
    }

    void search_entries() {
        struct Case {
            int k, q, n;
            std::function<std::optional<BigInt>()> formula;
            const char* anchor;
        };
        const std::vector<Case> cases{
            {2, 2, 2, [] { return std::optional<BigInt>(ipow(2, 2) + 1); }, "N_2(q,n) = n^q + 1"},
            {2, 3, 2, [] { return std::optional<BigInt>(ipow(2, 3) + 1); }, "N_2(q,n) = n^q + 1"},
            {3, 2, 2, [] { return std::optional<BigInt>(p1_closed(2) + 1); }, "N_3(q,n) = P_{q-1}(n) + 1"},
            {4, 2, 2, [this] { auto r = rho(4, 2, 2); return r ? std::optional<BigInt>(*r + 1) : std::nullopt; },
             "N_k(2,n) = rho_k(n) + 1"},
        };
        for (const auto& c : cases) {
            const nlohmann::json params{{"k", c.k}, {"q", c.q}, {"n", c.n}};
            const auto f = c.formula();
            if (!f) {
                skip("search_matches_formula", c.anchor, params, "formula side beyond the work budget");
                continue;
            }
            const SearchResult res = exact_ramsey(c.k, c.q, c.n, f->convert_to<int>() + 1, cfg_.search);
            if (res.status != SearchStatus::exact) {
                skip("search_matches_formula", c.anchor, params, std::string("search ") + to_string(res.status));
                continue;
            }
            add("search_matches_formula", c.anchor, std::to_string(*res.value), to_decimal(*f),
                holds(BigInt(*res.value) == *f), params);
        }
    }

    void rates() {
        // log2 P_2(n) / n^2 against c = (3/2)(3 log2 3 - 4)
        const Interval c = Interval::exact(BigRational(3, 2)) *
                           (Interval::exact(3) * log2(BigInt(3)) - Interval::exact(4));
        for (int n : {4, 8, 16, 32, 64}) {
            const BigInt p = macmahon(static_cast<unsigned>(n));
            const Interval rate = log2(p) / Interval::exact(BigRational(n * n));
            add("plane_partition_rate", "N_3(3,n) = 2^((c-o(1)) n^2), c = (3/2)(3 log2 3 - 4)", approx(rate), approx(c),
                Verdict::rate, {{"n", n}}, "asymptotic; finite-n rate reported, not falsifiable at desk scale");
        }
        // M_{d,n} sqrt(d) / n^(d-1) against 2/3 and sqrt(6/pi)
        const Interval pi = Interval::point(boost::math::constants::pi<Real>());
        const Interval improved = sqrt(Interval::exact(6) / pi);
        for (int n : {2, 3, 4})
            for (int d : {1, 2, 4, 8, 16, 32}) {
                const BigInt m = middle_max(n, d).second;
                const Interval rate = Interval::exact(BigRational(m, ipow(n, static_cast<unsigned>(d - 1)))) *
                                      sqrt(Interval::exact(BigRational(d)));
                add("midrank_constant_rate", "M_{d,n} >= c n^(d-1)/sqrt(d); c = 2/3 proven, sqrt(6/pi) for large d",
                    approx(rate), "2/3 = 0.666666666667, sqrt(6/pi) = " + approx(improved), Verdict::rate,
                    {{"n", n}, {"d", d}}, "improved constant is asymptotic and not asserted");
            }
        // log2 P_d(n) sqrt(d+1) / n^d for every computed P_d(n)
        for (const auto& [key, p] : p_cache_) {
            const auto [d, n] = key;
            if (!p || d < 1) continue;
            const Interval rate = log2(*p) * sqrt(Interval::exact(BigRational(d + 1))) /
                                  Interval::exact(BigRational(ipow(n, static_cast<unsigned>(d))));
            add("partition_exponent_rate", "P_d(n) = 2^(Theta(n^d/sqrt(d)))", approx(rate), "2/3 (proven lower constant)",
                Verdict::rate, {{"d", d}, {"n", n}}, "open conjecture; exponent reported only");
        }
        // log2 of Dedekind-type counts over binom(d, d/2)
        for (int d = 1; d <= 6; ++d) {
            const auto p = P(d - 1, 2);
            if (!p) continue;
            const Interval rate = log2(*p) / Interval::exact(BigRational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2))));
            add("dedekind_exponent_rate", "antichains of [2]^d = 2^((1+o(1)) binom(d, d/2))", approx(rate), "1",
                Verdict::rate, {{"d", d}}, "asymptotic; reported only");
        }
    }

    const SuiteConfig& cfg_;
    std::vector<SuiteEntry> out_;
    std::map<std::pair<int, int>, std::optional<BigInt>> p_cache_;
    std::map<std::tuple<int, int, int>, std::optional<BigInt>> rho_cache_;
};

}  // namespace

std::vector<SuiteEntry> run_inequality_suite(const SuiteConfig& config) { return Suite(config).run(); }

}  // namespace hyperpath
