#include "z2z4/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "z2z4/dual.hpp"
#include "z2z4/io.hpp"

namespace z2z4 {

namespace {

using TypeSet = std::set<CodeType>;

CodeType qt(std::size_t beta, std::size_t g, std::size_t d) {
    return CodeType{0, beta, g, d, 0};
}
CodeType at(std::size_t a, std::size_t b, std::size_t g, std::size_t d, std::size_t k) {
    return CodeType{a, b, g, d, k};
}

AdditiveCode reg(const std::string& name) { return code_from_parity(paper_matrix(name)); }

TypeSet key_set(const TypeAtlas& atlas) {
    TypeSet out;
    for (const auto& [t, w] : atlas) out.insert(t);
    return out;
}

std::string set_str(const TypeSet& s) {
    std::string out;
    for (const auto& t : s) {
        if (!out.empty()) out += ' ';
        out += format_type(t);
    }
    return out.empty() ? "{}" : out;
}

SearchLimits limits_of(const VerifyOptions& opt) {
    SearchLimits l;
    l.workers = std::max<std::size_t>(1, opt.workers);
    return l;
}

void walk_ambient(Shape s, const std::function<void(const MixedVector&)>& fn) {
    const std::size_t bits = s.binary_length();
    if (bits > 20) throw std::length_error("ambient walk too large");
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        MixedVector v(s);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < s.alpha; ++i, c >>= 1)
            v.set_bin(i, static_cast<std::uint8_t>(c & 1u));
        for (std::size_t j = 0; j < s.beta; ++j, c >>= 2)
            v.set_quat(j, static_cast<std::uint8_t>(c & 3u));
        fn(v);
    }
}

bool orthogonal_to_all(const MixedVector& v, const MixedMatrix& gens) {
    for (const auto& r : gens.rows())
        if (inner_product(v, r) != 0) return false;
    return true;
}

Shape random_small_shape(std::mt19937_64& rng) {
    for (;;) {
        Shape s{rng() % 5, rng() % 7};
        if (s.width() >= 1 && s.binary_length() <= 16 && s.binary_length() >= 2) return s;
    }
}

MixedMatrix random_matrix(Shape s, std::mt19937_64& rng) {
    MixedMatrix m(s);
    const std::size_t rows = 1 + rng() % 4;
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::uint8_t> bin(s.alpha), quat(s.beta);
        for (auto& b : bin) b = static_cast<std::uint8_t>(rng() & 1u);
        for (auto& q : quat) q = static_cast<std::uint8_t>(rng() & 3u);
        m.append_row(MixedVector(std::move(bin), std::move(quat)));
    }
    return m;
}

// --- checkers ------------------------------------------------------------

CheckResult check_exbeta4(const VerifyOptions& opt) {
    CheckResult r{"exbeta4", true, {}};
    const AdditiveCode c1 = reg("qlpc-t3-H1");  // dual type (0,4;2,1)
    const AdditiveCode c2 = reg("qlpc-t3-H2");  // dual type (0,4;0,2)
    const SearchLimits lim = limits_of(opt);

    const TypeSet want11 = {qt(4, 2, 1)};
    const TypeSet want22 = {qt(4, 0, 2), qt(4, 0, 3)};
    const TypeSet want12 = {qt(4, 1, 2)};

    // The published table is for coordinate permutations. Sign flips
    // enlarge the orbit, so for them we only require containment and log
    // the full observed sets.
    for (bool signs : {false, true}) {
        const std::string tag = signs ? " (with signs)" : " (permutations)";
        TypeSet got11 = key_set(enumerate_types(c1, c1, SearchMode::Exhaustive, 0, signs, 0, lim));
        TypeSet got22 = key_set(enumerate_types(c2, c2, SearchMode::Exhaustive, 0, signs, 0, lim));
        TypeSet got12 = key_set(enumerate_types(c1, c2, SearchMode::Exhaustive, 0, signs, 0, lim));
        auto check = [&](const TypeSet& got, const TypeSet& want, const std::string& who) {
            const bool ok = signs ? std::includes(got.begin(), got.end(), want.begin(),
                                                  want.end())
                                  : got == want;
            r.require(ok, who + tag + ": " + set_str(got));
        };
        check(got11, want11, "C1 vs C1");
        check(got22, want22, "C2 vs C2");
        check(got12, want12, "C1 vs C2");
    }
    return r;
}

CheckResult check_teorema5_t3(const VerifyOptions&) {
    CheckResult r{"teorema5-t3", true, {}};
    const AdditiveCode c1 = reg("qlpc-t3-H2");  // parity [1111;0123]
    const AdditiveCode c2 = reg("qlpc-t3-H1");
    const Monomial pi = parse_permutation("(1,2)", c1.shape());
    const std::uint64_t e11 = eta(c1, c1);
    const std::uint64_t e12 = eta(c1, c2);
    const std::uint64_t e1p = eta(c1, apply_monomial(c1, pi));
    r.require(e11 == 16, "eta(C1,C1) = " + std::to_string(e11));
    r.require(e12 == 8, "eta(C1,C2) = " + std::to_string(e12));
    r.require(e1p == 4, "eta(C1,(1,2)C1) = " + std::to_string(e1p));
    return r;
}

CheckResult check_bounds_quaternary_t4(const VerifyOptions& opt) {
    CheckResult r{"boundsquaternary-t4", true, {}};
    const std::uint64_t budget = opt.budget ? opt.budget : 10000;
    const AdditiveCode a = code_from_parity(extended_perfect_z4_dual(4, 1));
    const AdditiveCode b = code_from_parity(extended_perfect_z4_dual(4, 2));
    const std::vector<std::pair<const AdditiveCode*, const AdditiveCode*>> pairs = {
        {&a, &a}, {&a, &b}, {&b, &a}, {&b, &b}};

    // The theorem range [2^8, 2^11] is for permutations: both duals keep
    // the common order-four all-ones subgroup. Sign flips only preserve
    // the all-twos vector, so for them the floor drops by one power of 2.
    std::mt19937_64 rng(opt.seed);
    for (bool signs : {false, true}) {
        const std::size_t lo = signs ? 7 : 8;
        std::uint64_t violations = 0, draws = 0;
        std::size_t seen_lo = 16, seen_hi = 0;
        for (std::uint64_t i = 0; i < budget; ++i) {
            const auto& [p, q] = pairs[i % pairs.size()];
            const Monomial m = random_monomial(a.shape(), rng, signs);
            const Witness w = evaluate_pair(*p, *q, m, opt.seed);
            ++draws;
            const std::size_t l = 16 - w.dual.log2_size();  // log2 eta, 2beta = 16
            seen_lo = std::min(seen_lo, l);
            seen_hi = std::max(seen_hi, l);
            if (l < lo || l > 11) {
                ++violations;
                if (violations <= 3) r.note("violation: " + report_line(w));
            }
        }
        r.require(violations == 0,
                  std::to_string(draws) + (signs ? " sign-flip" : " permutation") +
                      " draws, " + std::to_string(violations) +
                      " outside log2 eta range [" + std::to_string(lo) +
                      ",11]; observed [" + std::to_string(seen_lo) + "," +
                      std::to_string(seen_hi) + "]");
    }
    return r;
}

CheckResult check_teorema5_t4(const VerifyOptions& opt) {
    CheckResult r{"teorema5-t4", true, {}};
    const AdditiveCode c = code_from_parity(extended_perfect_z4_dual(4, 1));
    const std::uint64_t budget = opt.budget ? opt.budget : 20000;
    EtaAtlas atlas =
        enumerate_eta(c, c, SearchMode::Randomized, budget, false, opt.seed, limits_of(opt));
    const std::set<std::size_t> want = {5, 6, 7, 8};
    std::set<std::size_t> got;
    for (const auto& [l, w] : atlas) got.insert(l);
    if (got != want) {
        r.note("randomized pass incomplete; escalating to exhaustive");
        atlas = enumerate_eta(c, c, SearchMode::Exhaustive, 0, false, 0, limits_of(opt));
        got.clear();
        for (const auto& [l, w] : atlas) got.insert(l);
    }
    std::string got_str;
    for (auto l : got) got_str += std::to_string(l) + ' ';
    r.require(got == want, "achieved l values: " + got_str);
    for (const auto& [l, w] : atlas)
        r.require(w.eta == (std::uint64_t{1} << (16 - l)),
                  "l=" + std::to_string(l) + " eta=" + std::to_string(w.eta));
    return r;
}

CheckResult check_doubling(const VerifyOptions&) {
    CheckResult r{"doubling-lemmas", true, {}};

    auto quat_case = [&](const std::string& n1, const std::string& n2) {
        const MixedMatrix h1 = paper_matrix(n1);
        const MixedMatrix h2 = paper_matrix(n2);
        const std::size_t beta = h1.shape().beta;
        const AdditiveCode c1 = code_from_parity(h1);
        const AdditiveCode c2 = code_from_parity(h2);
        const Witness base = evaluate_pair(c1, c2, Monomial(h1.shape()));
        const std::size_t i = base.dual.gamma, j = base.dual.delta;
        const std::string tag = n1 + " | " + n2;

        const MixedMatrix dh1 = double_quaternary(h1), dh2 = double_quaternary(h2);
        r.require(compute_type(dh1) == qt(2 * beta, compute_type(h1).gamma + 1,
                                          compute_type(h1).delta),
                  tag + ": doubled dual type " + format_type(compute_type(dh1)));
        const AdditiveCode d1 = code_from_parity(dh1), d2 = code_from_parity(dh2);
        const Witness did = evaluate_pair(d1, d2, Monomial(dh1.shape()));
        const Witness dpi = evaluate_pair(d1, d2, double_quaternary_pi(beta));
        r.require(did.dual == qt(2 * beta, i + 1, j), tag + ": double Id -> " + format_type(did.dual));
        r.require(dpi.dual == qt(2 * beta, i + 2, j), tag + ": double pi -> " + format_type(dpi.dual));

        const MixedMatrix qh1 = quadruple_quaternary(h1), qh2 = quadruple_quaternary(h2);
        r.require(compute_type(qh1) == qt(4 * beta, compute_type(h1).gamma,
                                          compute_type(h1).delta + 1),
                  tag + ": quadrupled dual type " + format_type(compute_type(qh1)));
        const AdditiveCode q1 = code_from_parity(qh1), q2 = code_from_parity(qh2);
        const Witness qid = evaluate_pair(q1, q2, Monomial(qh1.shape()));
        const Witness qp1 = evaluate_pair(q1, q2, quadruple_quaternary_pi1(beta));
        const Witness qp2 = evaluate_pair(q1, q2, quadruple_quaternary_pi2(beta));
        r.require(qid.dual == qt(4 * beta, i, j + 1), tag + ": quad Id -> " + format_type(qid.dual));
        r.require(qp1.dual == qt(4 * beta, i, j + 2), tag + ": quad pi1 -> " + format_type(qp1.dual));
        r.require(qp2.dual == qt(4 * beta, i + 1, j + 1), tag + ": quad pi2 -> " + format_type(qp2.dual));
    };

    for (const char* n : {"qlpc-t3-H1", "qlpc-t3-H2", "qlpc-t4-H1", "qlpc-t4-H2",
                          "sec32-m2-H1", "sec32-m2-H2"})
        quat_case(n, n);
    quat_case("qlpc-t3-H1", "qlpc-t3-H2");

    auto additive_case = [&](const std::string& name) {
        const MixedMatrix h = paper_matrix(name);
        const CodeType bt = compute_type(h);
        const std::size_t i = bt.gamma, j = bt.delta, k = bt.kappa;
        const std::size_t a = h.shape().alpha, b = h.shape().beta;

        const MixedMatrix dh = double_additive(h);
        const CodeType dt = compute_type(dh);
        r.require(dt.gamma == i + 1 && dt.delta == j,
                  name + ": doubled dual type " + format_type(dt));
        const AdditiveCode d = code_from_parity(dh);
        const std::vector<Monomial> pis = double_additive_pis(h.shape());
        const std::vector<CodeType> want = {at(2 * a, 2 * b, i + 1, j, k + 1),
                                            at(2 * a, 2 * b, i + 2, j, k + 2),
                                            at(2 * a, 2 * b, i + 2, j, k + 1)};
        for (std::size_t p = 0; p < pis.size(); ++p) {
            const Witness w = evaluate_pair(d, d, pis[p]);
            r.require(w.dual == want[p],
                      name + ": double pi" + std::to_string(p) + " -> " + format_type(w.dual));
        }
    };
    for (const char* n : {"ex1-extended", "sec4-exbeta4z2z4-H2", "sec4-lemma17-H1"})
        additive_case(n);

    {
        const MixedMatrix h = paper_matrix("sec4-lemma17-H1");
        const CodeType bt = compute_type(h);
        const std::size_t i = bt.gamma, j = bt.delta, k = bt.kappa;
        const std::size_t a = h.shape().alpha, b = h.shape().beta;
        const MixedMatrix qh = quadruple_additive(h);
        const CodeType qtype = compute_type(qh);
        r.require(qtype.gamma == 1 && qtype.delta == j + 1,
                  "sec4-lemma17-H1: quadrupled dual type " + format_type(qtype));
        const AdditiveCode q = code_from_parity(qh);
        const std::vector<Monomial> pis = quadruple_additive_pis(h.shape());
        const std::vector<CodeType> want = {at(2 * a, a + 4 * b, i, j + 1, k),
                                            at(2 * a, a + 4 * b, i, j + 2, k),
                                            at(2 * a, a + 4 * b, i + 1, j + 1, k),
                                            at(2 * a, a + 4 * b, i + 1, j + 1, k + 1)};
        for (std::size_t p = 0; p < pis.size(); ++p) {
            const Witness w = evaluate_pair(q, q, pis[p]);
            r.require(w.dual == want[p], "sec4-lemma17-H1: quad pi" + std::to_string(p) +
                                             " -> " + format_type(w.dual));
        }
    }
    return r;
}

CheckResult check_exbeta4z2z4(const VerifyOptions& opt) {
    CheckResult r{"exbeta4z2z4", true, {}};
    const AdditiveCode c = reg("sec4-exbeta4z2z4-H2");
    const Shape s = c.shape();
    const std::vector<std::pair<std::string, CodeType>> table = {
        {"", at(4, 2, 2, 1, 2)},
        {"(1,2)", at(4, 2, 3, 1, 2)},
        {"(1,3)", at(4, 2, 3, 1, 3)},
        {"(1,2,3)", at(4, 2, 4, 1, 3)},
    };
    TypeSet want;
    for (const auto& [p, t] : table) {
        const Witness w = evaluate_pair(c, c, parse_permutation(p, s));
        r.require(w.dual == t, (p.empty() ? std::string("Id") : p) + " -> " +
                                   format_type(w.dual));
        want.insert(t);
    }
    const TypeSet got =
        key_set(enumerate_types(c, c, SearchMode::Exhaustive, 0, false, 0, limits_of(opt)));
    r.require(got == want, "exhaustive over S4 x S2: " + set_str(got));
    const TypeSet got_signs =
        key_set(enumerate_types(c, c, SearchMode::Exhaustive, 0, true, 0, limits_of(opt)));
    r.note("with signs: " + set_str(got_signs));
    return r;
}

CheckResult check_additive_g1(const VerifyOptions&) {
    CheckResult r{"additive-g1", true, {}};
    const AdditiveCode c = reg("sec4-lemma17-H1");  // dual type (4,6;1,2)
    const Shape s = c.shape();
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> table = {
        {1, 2, 1, ""},
        {2, 2, 1, "(5,7)"},
        {2, 2, 2, "(1,2)"},
        {3, 2, 1, "(1,3)(6,9)(8,10)"},
        {3, 2, 2, "(1,3)(5,7)"},
        {3, 2, 3, "(1,2,3)"},
        {1, 3, 1, "(5,6)"},
        {2, 3, 1, "(5,6)(9,10)"},
        {2, 3, 2, "(1,2)(6,9)"},
        {1, 4, 1, "(5,6)(7,9)"},
    };
    TypeSet seen;
    for (const auto& [g, d, k, p] : table) {
        const Witness w = evaluate_pair(c, c, parse_permutation(p, s));
        r.require(w.dual == at(4, 6, g, d, k),
                  (p.empty() ? std::string("Id") : p) + " -> " + format_type(w.dual));
        seen.insert(w.dual);
    }
    r.require(seen.size() == table.size(), "all ten dual types distinct");
    return r;
}

CheckResult check_structureadditive_t4(const VerifyOptions& opt) {
    CheckResult r{"structureadditive-t4", true, {}};
    const MixedMatrix h = double_additive(paper_matrix("sec4-exbeta4z2z4-H2"));
    const AdditiveCode c = code_from_parity(h);
    r.require(compute_type(h).gamma == 3 && compute_type(h).delta == 1,
              "base dual type " + format_type(compute_type(h)));

    const Witness replay =
        evaluate_pair(c, c, parse_permutation("(1,8,7,6,5,4,3)", c.shape()));
    r.require(replay.dual == at(8, 4, 6, 1, 6),
              "(1,8,7,6,5,4,3) replays to " + format_type(replay.dual));

    const CodeType refuted = at(8, 4, 6, 1, 3);
    const TypeAtlas perms =
        enumerate_types(c, c, SearchMode::Exhaustive, 0, false, 0, limits_of(opt));
    r.require(!perms.count(refuted), "permutation orbit lacks " + format_type(refuted));
    r.require(perms.count(at(8, 4, 6, 1, 6)) != 0, "permutation orbit contains (8,4;6,1;6)");
    for (const auto& [t, w] : perms)
        r.require(t.delta == 1 && 3 <= t.kappa && t.kappa <= t.gamma && t.gamma <= 6,
                  "within bounds: " + format_type(t));

    // The nonexistence statement is about permutation equivalence; sign
    // flips turn out to reach the excluded kappa, which we record.
    const TypeAtlas monos =
        enumerate_types(c, c, SearchMode::Exhaustive, 0, true, 0, limits_of(opt));
    if (monos.count(refuted))
        r.note("sign flips do reach it: " + report_line(monos.at(refuted)));
    r.note("permutation orbit types: " + set_str(key_set(perms)));
    r.note("monomial orbit types: " + set_str(key_set(monos)));
    return r;
}

CheckResult check_structureadditive_t5(const VerifyOptions&) {
    CheckResult r{"structureadditive-t5", true, {}};
    const MixedMatrix h =
        double_additive(double_additive(paper_matrix("sec4-exbeta4z2z4-H2")));
    const AdditiveCode c = code_from_parity(h);
    r.require(compute_type(h).gamma == 4 && compute_type(h).delta == 1,
              "base dual type " + format_type(compute_type(h)));
    const Monomial pi = parse_permutation(
        "(1,13,10,5)(2,14,9,6)(3,16,12,8)(4,15,11,7)(17,22,18,20,24,21)(19,23)",
        c.shape());
    const Witness w = evaluate_pair(c, c, pi);
    r.require(w.dual == at(16, 8, 8, 1, 4),
              "printed permutation replays to " + format_type(w.dual));
    return r;
}

CheckResult check_nonextended_t4(const VerifyOptions& opt) {
    CheckResult r{"nonextended-t4", true, {}};
    const AdditiveCode c = code_from_parity(perfect_z2z4_dual(4, 3));
    r.require(c.shape() == Shape{7, 4}, "shape (7,4)");
    const CodeType refuted = at(7, 4, 5, 1, 2);

    TypeSet candidates;
    for (std::size_t g = 2; g <= 5; ++g)
        for (std::size_t k = 2; k <= g; ++k) candidates.insert(at(7, 4, g, 1, k));
    TypeSet required = candidates;
    required.erase(refuted);

    const TypeAtlas perms =
        enumerate_types(c, c, SearchMode::Exhaustive, 0, false, 0, limits_of(opt));
    TypeSet got = key_set(perms);
    TypeSet missing;
    for (const auto& t : required)
        if (!got.count(t)) missing.insert(t);
    if (!missing.empty()) {
        r.note("permutations alone missed " + set_str(missing) + "; adding sign flips");
        const TypeAtlas monos =
            enumerate_types(c, c, SearchMode::Exhaustive, 0, true, 0, limits_of(opt));
        for (const auto& [t, w] : monos) got.insert(t);
        r.require(!key_set(monos).count(refuted),
                  "monomial orbit lacks " + format_type(refuted));
    }
    r.require(!got.count(refuted), "orbit lacks " + format_type(refuted));
    for (const auto& t : required)
        r.require(got.count(t) != 0, "achieved " + format_type(t));
    for (const auto& t : got)
        r.require(candidates.count(t) != 0, "within bounds: " + format_type(t));
    return r;
}

CheckResult check_dual_oracle(const VerifyOptions& opt) {
    CheckResult r{"dual-oracle", true, {}};
    std::mt19937_64 rng(opt.seed);
    const std::size_t trials = opt.budget ? static_cast<std::size_t>(opt.budget) : 200;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const Shape s = random_small_shape(rng);
        const MixedMatrix m = random_matrix(s, rng);
        const AdditiveCode c(m);
        const AdditiveCode d = dual(c);

        std::vector<MixedVector> brute;
        walk_ambient(s, [&](const MixedVector& v) {
            if (orthogonal_to_all(v, c.gens())) brute.push_back(v);
        });
        std::sort(brute.begin(), brute.end());
        std::vector<MixedVector> got = d.codewords();
        std::sort(got.begin(), got.end());

        const bool ok = got == brute && dual(d) == c &&
                        c.size() * d.size() == (std::uint64_t{1} << s.binary_length());
        if (!ok) {
            ++bad;
            if (bad <= 3)
                r.note("mismatch at trial " + std::to_string(i) + " shape (" +
                       std::to_string(s.alpha) + "," + std::to_string(s.beta) + ")");
        }
    }
    r.require(bad == 0, std::to_string(trials) + " random codes, " + std::to_string(bad) +
                            " disagreements with the brute-force annihilator");
    return r;
}

CheckResult check_intersect_oracle(const VerifyOptions& opt) {
    CheckResult r{"intersect-oracle", true, {}};
    std::mt19937_64 rng(opt.seed + 1);
    const std::size_t trials = opt.budget ? static_cast<std::size_t>(opt.budget) : 200;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const Shape s = random_small_shape(rng);
        const AdditiveCode c1(random_matrix(s, rng));
        const AdditiveCode c2(random_matrix(s, rng));

        std::vector<MixedVector> brute;
        c1.enumerate([&](const MixedVector& v) {
            if (c2.contains(v)) brute.push_back(v);
        });
        std::sort(brute.begin(), brute.end());

        std::vector<MixedVector> got = intersect(c1, c2).codewords();
        std::sort(got.begin(), got.end());
        if (got != brute) {
            ++bad;
            if (bad <= 3) r.note("mismatch at trial " + std::to_string(i));
        }
    }
    r.require(bad == 0, std::to_string(trials) + " random pairs, " + std::to_string(bad) +
                            " disagreements with brute-force intersection");
    return r;
}

CheckResult check_perfect_certification(const VerifyOptions& opt) {
    CheckResult r{"perfect-certification", true, {}};
    const std::size_t guard = std::max<std::size_t>(opt.guard_log2, 26);

    for (std::size_t t = 3; t <= 5; ++t) {
        for (std::size_t d = 1; 2 * d <= t + 1; ++d) {
            const MixedMatrix h = extended_perfect_z4_dual(t, d);
            const std::size_t beta = std::size_t{1} << (t - 1);
            const std::string tag =
                "extended t=" + std::to_string(t) + " delta=" + std::to_string(d);
            r.require(compute_type(h) == qt(beta, t + 1 - 2 * d, d), tag + ": dual type");
            const AdditiveCode c = code_from_parity(h);
            r.require(c.size() == (std::uint64_t{1} << (2 * beta - t - 1)),
                      tag + ": |C| = 2^" + std::to_string(c.type().log2_size()));
            const std::size_t md = c.min_distance(guard);
            r.require(md == 4, tag + ": min distance " + std::to_string(md));
        }
    }

    for (std::size_t t = 3; t <= 4; ++t) {
        for (std::size_t r2 = (t + 1) / 2; r2 + 1 <= t; ++r2) {
            const MixedMatrix h = perfect_z2z4_dual(t, r2);
            const Shape s = h.shape();
            const std::string tag =
                "perfect t=" + std::to_string(t) + " r=" + std::to_string(r2);
            r.require(s.alpha == (std::size_t{1} << r2) - 1 &&
                          s.beta == (std::size_t{1} << (t - 1)) - (std::size_t{1} << (r2 - 1)),
                      tag + ": shape");
            r.require(compute_type(h) == at(s.alpha, s.beta, 2 * r2 - t, t - r2, 2 * r2 - t),
                      tag + ": dual type " + format_type(compute_type(h)));
            const AdditiveCode c = code_from_parity(h);
            r.require(c.size() == (std::uint64_t{1} << (s.binary_length() - t)),
                      tag + ": |C| = 2^" + std::to_string(c.type().log2_size()));
            const std::size_t md = c.min_distance(guard);
            r.require(md == 3, tag + ": min distance " + std::to_string(md));

            // Radius-1 covering: the 1 + alpha + 2*beta = 2^t vectors of
            // Gray weight <= 1 must land in pairwise distinct cosets.
            const AdditiveCode dualc(h);
            std::set<std::vector<std::uint8_t>> syndromes;
            auto syndrome_of = [&](const MixedVector& v) {
                std::vector<std::uint8_t> syn;
                for (const auto& row : dualc.gens().rows())
                    syn.push_back(inner_product(v, row));
                return syn;
            };
            syndromes.insert(syndrome_of(MixedVector(s)));
            for (std::size_t i = 0; i < s.alpha; ++i) {
                MixedVector v(s);
                v.set_bin(i, 1);
                syndromes.insert(syndrome_of(v));
            }
            for (std::size_t j = 0; j < s.beta; ++j)
                for (std::uint8_t val : {1, 3}) {
                    MixedVector v(s);
                    v.set_quat(j, val);
                    syndromes.insert(syndrome_of(v));
                }
            r.require(syndromes.size() == 1 + s.alpha + 2 * s.beta,
                      tag + ": " + std::to_string(syndromes.size()) +
                          " distinct radius-1 syndromes");
        }
    }
    return r;
}

CheckResult check_hamming_t4(const VerifyOptions& opt) {
    CheckResult r{"hamming-t4", true, {}};
    const AdditiveCode c = code_from_parity(hamming_parity(4));
    const std::uint64_t budget = opt.budget ? opt.budget : 20000;
    const EtaAtlas atlas =
        enumerate_eta(c, c, SearchMode::Randomized, budget, false, opt.seed, limits_of(opt));
    std::set<std::size_t> got;
    for (const auto& [l, w] : atlas) got.insert(l);
    const std::set<std::size_t> want = {4, 5, 6, 7, 8};
    std::string got_str;
    for (auto l : got) got_str += std::to_string(l) + ' ';
    r.require(got == want, "achieved ranks: " + got_str);
    for (const auto& [l, w] : atlas)
        r.require(w.eta == (std::uint64_t{1} << (15 - l)),
                  "r=" + std::to_string(l) + " eta=" + std::to_string(w.eta));
    return r;
}

// --- the t=5 quaternary atlas -------------------------------------------

std::set<std::pair<std::size_t, std::size_t>> required_cells(std::size_t d1, std::size_t d2) {
    const std::size_t g1 = 6 - 2 * d1, g2 = 6 - 2 * d2;
    std::set<std::pair<std::size_t, std::size_t>> out;  // (gamma, delta)
    for (std::size_t delta = std::max(d1, d2); delta + 1 <= d1 + d2; ++delta) {
        const std::size_t lo = std::max(delta, std::max(g1 + d1, g2 + d2));
        const std::size_t hi = g1 + g2 + d1 + d2 - 1;
        for (std::size_t gd = lo; gd <= hi; ++gd) out.emplace(gd - delta, delta);
    }
    return out;
}

std::string atlas_line(const AtlasEntry& e) {
    std::ostringstream out;
    out << "pair (" << e.dbar1 << "," << e.dbar2 << ") cell=" << format_type(e.cell)
        << " base1=" << e.base1 << " base2=" << e.base2 << " pi="
        << emit_permutation(
               Monomial(e.witness.monomial.shape(),
                        std::vector<std::uint32_t>(e.witness.monomial.perm())));
    return out.str();
}

}  // namespace

std::vector<AtlasEntry> gapsquaternary_t5_atlas(const VerifyOptions& opt) {
    const SearchLimits lim = limits_of(opt);
    const MixedMatrix h41 = extended_perfect_z4_dual(4, 1);
    const MixedMatrix h42 = extended_perfect_z4_dual(4, 2);
    const AdditiveCode a1 = code_from_parity(h41), a2 = code_from_parity(h42);
    const AdditiveCode b1 = reg("qlpc-t3-H1"), b2 = reg("qlpc-t3-H2");

    const TypeAtlas t4_11 = enumerate_types(a1, a1, SearchMode::Exhaustive, 0, false, 0, lim);
    const TypeAtlas t4_12 = enumerate_types(a1, a2, SearchMode::Exhaustive, 0, false, 0, lim);
    const TypeAtlas t4_22 = enumerate_types(a2, a2, SearchMode::Exhaustive, 0, false, 0, lim);
    const TypeAtlas t3_22 = enumerate_types(b2, b2, SearchMode::Exhaustive, 0, false, 0, lim);
    const TypeAtlas t3_12 = enumerate_types(b1, b2, SearchMode::Exhaustive, 0, false, 0, lim);

    const AdditiveCode d51 = code_from_parity(double_quaternary(h41));
    const AdditiveCode d52 = code_from_parity(double_quaternary(h42));
    const AdditiveCode q52 = code_from_parity(quadruple_quaternary(paper_matrix("qlpc-t3-H1")));
    const AdditiveCode q53 = code_from_parity(quadruple_quaternary(paper_matrix("qlpc-t3-H2")));

    std::vector<AtlasEntry> out;
    auto add = [&](std::size_t d1, std::size_t d2, const AdditiveCode& c1,
                   const AdditiveCode& c2, const std::string& n1, const std::string& n2,
                   const Monomial& m) {
        const Witness w = evaluate_pair(c1, c2, m);
        out.push_back(AtlasEntry{d1, d2, w.dual, w, n1, n2});
    };

    auto double_lifts = [&](std::size_t d1, std::size_t d2, const TypeAtlas& base,
                            const AdditiveCode& c1, const AdditiveCode& c2,
                            const std::string& n1, const std::string& n2) {
        const Monomial tau = double_quaternary_pi(8);
        for (const auto& [cell, w] : base) {
            const Monomial m0 = block_lift(w.monomial, 2);
            add(d1, d2, c1, c2, n1, n2, m0);
            add(d1, d2, c1, c2, n1, n2, tau.after(m0));
        }
    };
    auto quad_lifts = [&](std::size_t d1, std::size_t d2, const TypeAtlas& base,
                          const AdditiveCode& c1, const AdditiveCode& c2,
                          const std::string& n1, const std::string& n2) {
        const Monomial p1 = quadruple_quaternary_pi1(4);
        const Monomial p2 = quadruple_quaternary_pi2(4);
        for (const auto& [cell, w] : base) {
            const Monomial m0 = block_lift(w.monomial, 4);
            add(d1, d2, c1, c2, n1, n2, m0);
            add(d1, d2, c1, c2, n1, n2, p1.after(m0));
            add(d1, d2, c1, c2, n1, n2, p2.after(m0));
        }
    };

    double_lifts(1, 1, t4_11, d51, d51, "double(t4,delta=1)", "double(t4,delta=1)");
    double_lifts(1, 2, t4_12, d51, d52, "double(t4,delta=1)", "double(t4,delta=2)");
    double_lifts(2, 2, t4_22, d52, d52, "double(t4,delta=2)", "double(t4,delta=2)");
    quad_lifts(3, 3, t3_22, q53, q53, "quad(qlpc-t3-H2)", "quad(qlpc-t3-H2)");
    quad_lifts(2, 3, t3_12, q52, q53, "quad(qlpc-t3-H1)", "quad(qlpc-t3-H2)");

    const Shape s16{0, 16};
    add(3, 3, q53, q53, "quad(qlpc-t3-H2)", "quad(qlpc-t3-H2)",
        parse_permutation("(7,13,15)(8,14,16)", s16));

    const AdditiveCode p1 = reg("sec32-m2-H1");  // dual type (0,16;2,2)
    const AdditiveCode p2 = reg("sec32-m2-H2");  // dual type (0,16;0,3)
    for (const char* pi : {"(2,4)(3,5)", "(1,2)(3,4)(5,8,7,6)", "(1,2)(3,5)"})
        add(2, 3, p1, p2, "sec32-m2-H1", "sec32-m2-H2",
            parse_permutation(pi, s16).inverse());

    const LexPair lex = lemma_lex_pair(2);
    const AdditiveCode l1 = code_from_parity(lex.h1);  // dual type (0,16;0,3)
    const AdditiveCode l2 = code_from_parity(lex.h2);  // dual type (0,16;4,1)
    add(3, 1, l1, l2, "lex-pair-H1", "lex-pair-H2", Monomial(s16));
    add(3, 1, l1, l2, "lex-pair-H1", "lex-pair-H2", lex.sigmas[0]);
    add(3, 1, l1, l2, "lex-pair-H1", "lex-pair-H2", lex.sigmas[0].after(lex.sigmas[1]));
    return out;
}

namespace {

std::vector<AtlasEntry> dedup_atlas(const std::vector<AtlasEntry>& entries) {
    std::set<std::tuple<std::size_t, std::size_t, CodeType>> seen;
    std::vector<AtlasEntry> out;
    for (const auto& e : entries) {
        const std::size_t lo = std::min(e.dbar1, e.dbar2), hi = std::max(e.dbar1, e.dbar2);
        if (seen.emplace(lo, hi, e.cell).second) out.push_back(e);
    }
    std::stable_sort(out.begin(), out.end(), [](const AtlasEntry& x, const AtlasEntry& y) {
        const auto kx = std::tuple(std::min(x.dbar1, x.dbar2), std::max(x.dbar1, x.dbar2),
                                   x.cell);
        const auto ky = std::tuple(std::min(y.dbar1, y.dbar2), std::max(y.dbar1, y.dbar2),
                                   y.cell);
        return kx < ky;
    });
    return out;
}

CheckResult check_gapsquaternary_t5(const VerifyOptions& opt) {
    CheckResult r{"gapsquaternary-t5", true, {}};
    const std::vector<AtlasEntry> atlas = dedup_atlas(gapsquaternary_t5_atlas(opt));

    const std::vector<std::pair<std::size_t, std::size_t>> pairs = {
        {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    for (const auto& [d1, d2] : pairs) {
        const auto want = required_cells(d1, d2);
        std::set<std::pair<std::size_t, std::size_t>> got;
        for (const auto& e : atlas)
            if (std::min(e.dbar1, e.dbar2) == d1 && std::max(e.dbar1, e.dbar2) == d2)
                got.emplace(e.cell.gamma, e.cell.delta);
        std::ostringstream line;
        line << "pair (" << d1 << "," << d2 << "): " << got.size() << "/" << want.size()
             << " cells";
        for (const auto& cell : want)
            if (!got.count(cell))
                line << " missing (" << cell.first << "," << cell.second << ")";
        bool subset_ok = true;
        for (const auto& cell : got)
            if (!want.count(cell)) {
                subset_ok = false;
                line << " extra (" << cell.first << "," << cell.second << ")";
            }
        r.require(got == want && subset_ok, line.str());
    }
    for (const auto& e : atlas) r.note(atlas_line(e));
    return r;
}

}  // namespace

std::string reproduce_exbeta4() {
    const AdditiveCode c1 = reg("qlpc-t3-H1");
    const AdditiveCode c2 = reg("qlpc-t3-H2");
    auto line = [&](const std::string& label, const AdditiveCode& x, const AdditiveCode& y) {
        std::string out = label + ":";
        for (const auto& t : key_set(enumerate_types(x, y, SearchMode::Exhaustive, 0, false)))
            out += " " + format_type(t);
        return out + "\n";
    };
    return line("C1 vs pi(C1)", c1, c1) + line("C2 vs pi(C2)", c2, c2) +
           line("C1 vs pi(C2)", c1, c2);
}

std::string reproduce_gapsquaternary_t5(const VerifyOptions& opt) {
    std::string out;
    for (const auto& e : dedup_atlas(gapsquaternary_t5_atlas(opt))) {
        out += atlas_line(e);
        out += '\n';
    }
    return out;
}

std::vector<std::string> check_ids() {
    return {"exbeta4",
            "teorema5-t3",
            "boundsquaternary-t4",
            "teorema5-t4",
            "doubling-lemmas",
            "exbeta4z2z4",
            "additive-g1",
            "structureadditive-t4",
            "nonextended-t4",
            "dual-oracle",
            "intersect-oracle",
            "perfect-certification",
            "hamming-t4",
            "gapsquaternary-t5",
            "structureadditive-t5"};
}

CheckResult run_check(const std::string& id, const VerifyOptions& opt) {
    if (id == "exbeta4") return check_exbeta4(opt);
    if (id == "teorema5-t3") return check_teorema5_t3(opt);
    if (id == "boundsquaternary-t4") return check_bounds_quaternary_t4(opt);
    if (id == "teorema5-t4") return check_teorema5_t4(opt);
    if (id == "doubling-lemmas") return check_doubling(opt);
    if (id == "exbeta4z2z4") return check_exbeta4z2z4(opt);
    if (id == "additive-g1") return check_additive_g1(opt);
    if (id == "structureadditive-t4") return check_structureadditive_t4(opt);
    if (id == "nonextended-t4") return check_nonextended_t4(opt);
    if (id == "dual-oracle") return check_dual_oracle(opt);
    if (id == "intersect-oracle") return check_intersect_oracle(opt);
    if (id == "perfect-certification") return check_perfect_certification(opt);
    if (id == "hamming-t4") return check_hamming_t4(opt);
    if (id == "gapsquaternary-t5") return check_gapsquaternary_t5(opt);
    if (id == "structureadditive-t5") return check_structureadditive_t5(opt);
    throw std::invalid_argument("unknown check id: " + id);
}

}  // namespace z2z4
