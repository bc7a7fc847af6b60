#include "z2z4/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "z2z4/dual.hpp"
#include "z2z4/io.hpp"

namespace z2z4 {

namespace {

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (f > UINT64_MAX / i) throw std::length_error("orbit size overflows 64 bits");
        f *= i;
    }
    return f;
}

/// Lehmer-code unranking of S_n onto coordinates base..base+n-1,
/// written into perm.
void unrank_block(std::vector<std::uint32_t>& perm, std::size_t base, std::size_t n,
                  std::uint64_t rank) {
    std::vector<std::uint32_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(base + i);
    std::uint64_t radix = factorial(n);
    for (std::size_t i = 0; i < n; ++i) {
        radix /= n - i;
        const std::size_t pick = static_cast<std::size_t>(rank / radix);
        rank %= radix;
        perm[base + i] = pool[pick];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
}

std::uint64_t rank_block(const std::vector<std::uint32_t>& perm, std::size_t base,
                         std::size_t n) {
    std::vector<std::uint32_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(base + i);
    std::uint64_t rank = 0;
    std::uint64_t radix = factorial(n);
    for (std::size_t i = 0; i < n; ++i) {
        radix /= n - i;
        const auto it = std::find(pool.begin(), pool.end(), perm[base + i]);
        rank += radix * static_cast<std::uint64_t>(it - pool.begin());
        pool.erase(it);
    }
    return rank;
}

/// The orbit evaluator: bases enter through their duals, so one step is
/// a row-stack reduction, never a codeword walk.
struct Engine {
    Shape shape;
    std::vector<MixedVector> d1;
    std::vector<MixedVector> d2;

    Engine(const AdditiveCode& base1, const AdditiveCode& base2)
        : shape(base1.shape()) {
        if (base1.shape() != base2.shape())
            throw std::invalid_argument("base shapes differ");
        d1 = dual(base1).gens().rows();
        d2 = dual(base2).gens().rows();
    }

    Witness eval(const Monomial& m, std::uint64_t seed) const {
        MixedMatrix stack(shape);
        for (const auto& r : d1) stack.append_row(r);
        // m(C2)^perp = m(C2^perp): monomials respect the inner product.
        for (const auto& r : d2) stack.append_row(m.apply(r));
        const CodeType span_type = compute_type(stack);
        Witness w;
        w.monomial = m;
        w.dual = span_type;
        w.achieved = dual_type(span_type);
        w.eta = std::uint64_t{1} << (shape.binary_length() - span_type.log2_size());
        w.seed = seed;
        return w;
    }
};

/// Equal-column classes of the matrix the monomials act on. Permutations
/// that only shuffle identical columns fix the matrix, so each coset of
/// that Young subgroup needs one representative: the permutation whose
/// images increase along each class.
std::vector<std::uint32_t> column_classes(Shape shape, const std::vector<MixedVector>& rows) {
    std::vector<std::uint32_t> cls(shape.width());
    std::map<std::vector<std::uint8_t>, std::uint32_t> seen;
    std::uint32_t next = 0;
    for (std::size_t j = 0; j < shape.width(); ++j) {
        std::vector<std::uint8_t> key;
        key.push_back(j < shape.alpha ? 0 : 1);
        for (const auto& r : rows)
            key.push_back(j < shape.alpha ? r.bin(j) : r.quat(j - shape.alpha));
        auto [it, fresh] = seen.emplace(std::move(key), next);
        if (fresh) ++next;
        cls[j] = it->second;
    }
    return cls;
}

bool coset_minimal(const Monomial& m, const std::vector<std::uint32_t>& cls) {
    std::vector<std::uint32_t> last(cls.size(), UINT32_MAX);
    for (std::size_t j = 0; j < cls.size(); ++j) {
        const std::uint32_t c = cls[j];
        if (last[c] != UINT32_MAX && m.perm()[j] < last[c]) return false;
        last[c] = m.perm()[j];
    }
    return true;
}

struct Hit {
    std::uint64_t rank;
    Witness witness;
};

using RankedAtlas = std::map<CodeType, Hit>;

void merge_atlas(RankedAtlas& into, const RankedAtlas& from) {
    for (const auto& [t, hit] : from) {
        auto it = into.find(t);
        if (it == into.end() || hit.rank < it->second.rank) into[t] = hit;
    }
}

struct SweepResult {
    RankedAtlas atlas;
    std::optional<Hit> target_hit;
    std::uint64_t examined = 0;
};

bool matches(const Witness& w, const std::optional<CodeType>& target_dual,
             const std::optional<std::size_t>& target_log2_eta) {
    if (target_dual) return w.dual == *target_dual;
    if (target_log2_eta)
        return w.eta == std::uint64_t{1} << *target_log2_eta;
    return false;
}

SweepResult exhaustive_sweep(const Engine& eng, bool use_signs, const SearchLimits& limits,
                             const std::optional<CodeType>& target_dual,
                             const std::optional<std::size_t>& target_log2_eta,
                             bool stop_on_hit) {
    const std::uint64_t orbit = orbit_size(eng.shape, use_signs);
    if (limits.orbit_ceiling_log2 < 64 &&
        orbit > (std::uint64_t{1} << limits.orbit_ceiling_log2))
        throw std::length_error("orbit exceeds the exhaustive-search ceiling");

    const std::vector<std::uint32_t> cls = column_classes(eng.shape, eng.d2);
    const std::size_t nworkers = std::max<std::size_t>(1, limits.workers);
    std::atomic<bool> stop{false};
    std::vector<SweepResult> parts(nworkers);

    auto work = [&](std::size_t w) {
        SweepResult& out = parts[w];
        const std::uint64_t lo = orbit * w / nworkers;
        const std::uint64_t hi = orbit * (w + 1) / nworkers;
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            if (stop.load(std::memory_order_relaxed)) return;
            Monomial m = monomial_from_rank(eng.shape, rank, use_signs);
            if (limits.prune && !coset_minimal(m, cls)) continue;
            Witness wit = eng.eval(m, 0);
            ++out.examined;
            auto it = out.atlas.find(wit.dual);
            if (it == out.atlas.end()) out.atlas.emplace(wit.dual, Hit{rank, wit});
            if (matches(wit, target_dual, target_log2_eta)) {
                if (!out.target_hit || rank < out.target_hit->rank)
                    out.target_hit = Hit{rank, wit};
                if (stop_on_hit) {
                    stop.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    if (nworkers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::size_t w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SweepResult merged;
    for (const auto& p : parts) {
        merge_atlas(merged.atlas, p.atlas);
        merged.examined += p.examined;
        if (p.target_hit &&
            (!merged.target_hit || p.target_hit->rank < merged.target_hit->rank))
            merged.target_hit = p.target_hit;
    }
    return merged;
}

SweepResult randomized_sweep(const Engine& eng, bool use_signs, std::uint64_t budget,
                             std::uint64_t seed, const SearchLimits& limits,
                             const std::optional<CodeType>& target_dual,
                             const std::optional<std::size_t>& target_log2_eta,
                             bool stop_on_hit) {
    const std::size_t nworkers = std::max<std::size_t>(1, limits.workers);
    std::atomic<bool> stop{false};
    std::vector<SweepResult> parts(nworkers);

    auto work = [&](std::size_t w) {
        SweepResult& out = parts[w];
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * (w + 1));
        const std::uint64_t lo = budget * w / nworkers;
        const std::uint64_t hi = budget * (w + 1) / nworkers;
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (stop.load(std::memory_order_relaxed)) return;
            Monomial m = random_monomial(eng.shape, rng, use_signs);
            Witness wit = eng.eval(m, seed);
            ++out.examined;
            auto it = out.atlas.find(wit.dual);
            if (it == out.atlas.end()) out.atlas.emplace(wit.dual, Hit{i, wit});
            if (matches(wit, target_dual, target_log2_eta)) {
                if (!out.target_hit || i < out.target_hit->rank)
                    out.target_hit = Hit{i, wit};
                if (stop_on_hit) {
                    stop.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    if (nworkers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::size_t w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SweepResult merged;
    for (const auto& p : parts) {
        merge_atlas(merged.atlas, p.atlas);
        merged.examined += p.examined;
        if (p.target_hit &&
            (!merged.target_hit || p.target_hit->rank < merged.target_hit->rank))
            merged.target_hit = p.target_hit;
    }
    return merged;
}

}  // namespace

Witness evaluate_pair(const AdditiveCode& base1, const AdditiveCode& base2,
                      const Monomial& m, std::uint64_t seed) {
    return Engine(base1, base2).eval(m, seed);
}

std::uint64_t orbit_size(Shape s, bool use_signs) {
    std::uint64_t total = factorial(s.alpha);
    const std::uint64_t fb = factorial(s.beta);
    if (fb != 0 && total > UINT64_MAX / fb)
        throw std::length_error("orbit size overflows 64 bits");
    total *= fb;
    if (use_signs) {
        if (s.beta >= 64 || total > (UINT64_MAX >> s.beta))
            throw std::length_error("orbit size overflows 64 bits");
        total <<= s.beta;
    }
    return total;
}

Monomial monomial_from_rank(Shape s, std::uint64_t rank, bool use_signs) {
    std::vector<std::uint8_t> signs(s.beta, 0);
    if (use_signs) {
        for (std::size_t k = 0; k < s.beta; ++k) signs[k] = (rank >> k) & 1u;
        rank >>= s.beta;
    }
    const std::uint64_t fb = factorial(s.beta);
    std::vector<std::uint32_t> perm(s.width());
    unrank_block(perm, s.alpha, s.beta, rank % fb);
    unrank_block(perm, 0, s.alpha, rank / fb);
    return Monomial(s, std::move(perm), std::move(signs));
}

std::uint64_t monomial_rank(const Monomial& m, bool use_signs) {
    const Shape s = m.shape();
    std::uint64_t rank = rank_block(m.perm(), 0, s.alpha) * factorial(s.beta) +
                         rank_block(m.perm(), s.alpha, s.beta);
    if (use_signs) {
        rank <<= s.beta;
        for (std::size_t k = 0; k < s.beta; ++k)
            rank |= static_cast<std::uint64_t>(m.signs()[k]) << k;
    }
    return rank;
}

Monomial random_monomial(Shape s, std::mt19937_64& rng, bool use_signs) {
    std::vector<std::uint32_t> perm(s.width());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);

    auto shuffle_block = [&](std::size_t base, std::size_t n) {
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(perm[base + i - 1], perm[base + j]);
        }
    };
    auto random_swap = [&](std::size_t base, std::size_t n) {
        const std::size_t a = static_cast<std::size_t>(rng() % n);
        std::size_t b = static_cast<std::size_t>(rng() % (n - 1));
        if (b >= a) ++b;
        std::swap(perm[base + a], perm[base + b]);
    };

    // Uniform draws find the generic intersections; sparse perturbations
    // of the identity find the nearly aligned ones.
    if (rng() % 5 < 2) {
        shuffle_block(0, s.alpha);
        shuffle_block(s.alpha, s.beta);
    } else {
        const std::size_t swaps = static_cast<std::size_t>(rng() % 7);
        for (std::size_t k = 0; k < swaps; ++k) {
            const bool pick_bin =
                s.alpha >= 2 && (s.beta < 2 || rng() % s.width() < s.alpha);
            if (pick_bin)
                random_swap(0, s.alpha);
            else if (s.beta >= 2)
                random_swap(s.alpha, s.beta);
        }
    }

    std::vector<std::uint8_t> signs(s.beta, 0);
    if (use_signs && s.beta > 0) {
        const std::size_t flips = static_cast<std::size_t>(rng() % (s.beta + 1));
        for (std::size_t k = 0; k < flips; ++k)
            signs[static_cast<std::size_t>(rng() % s.beta)] ^= 1;
    }
    return Monomial(s, std::move(perm), std::move(signs));
}

SearchResult search(const SearchTask& task, const SearchLimits& limits) {
    if (!task.target_dual && !task.target_log2_eta)
        throw std::invalid_argument("search task has no target");
    if (task.target_dual && task.target_log2_eta)
        throw std::invalid_argument("search task has two targets");

    Engine eng(task.base1, task.base2);
    const bool stop_on_hit = task.target_dual.has_value();
    SweepResult sweep =
        task.mode == SearchMode::Exhaustive
            ? exhaustive_sweep(eng, task.use_signs, limits, task.target_dual,
                               task.target_log2_eta, stop_on_hit)
            : randomized_sweep(eng, task.use_signs, task.budget, task.seed, limits,
                               task.target_dual, task.target_log2_eta, stop_on_hit);

    SearchResult res;
    res.examined = sweep.examined;
    if (sweep.target_hit) {
        res.status = SearchStatus::Found;
        res.witness = sweep.target_hit->witness;
    } else {
        res.status = task.mode == SearchMode::Exhaustive
                         ? SearchStatus::RefutedByExhaustion
                         : SearchStatus::NotFound;
    }
    return res;
}

TypeAtlas enumerate_types(const AdditiveCode& base1, const AdditiveCode& base2,
                          SearchMode mode, std::uint64_t budget, bool use_signs,
                          std::uint64_t seed, const SearchLimits& limits) {
    Engine eng(base1, base2);
    SweepResult sweep =
        mode == SearchMode::Exhaustive
            ? exhaustive_sweep(eng, use_signs, limits, std::nullopt, std::nullopt, false)
            : randomized_sweep(eng, use_signs, budget, seed, limits, std::nullopt,
                               std::nullopt, false);
    TypeAtlas out;
    for (const auto& [t, hit] : sweep.atlas) out.emplace(t, hit.witness);
    return out;
}

EtaAtlas enumerate_eta(const AdditiveCode& base1, const AdditiveCode& base2,
                       SearchMode mode, std::uint64_t budget, bool use_signs,
                       std::uint64_t seed, const SearchLimits& limits) {
    TypeAtlas types = enumerate_types(base1, base2, mode, budget, use_signs, seed, limits);
    EtaAtlas out;
    for (const auto& [t, w] : types) {
        // eta = 2^(n - l) where l = log2 of the span of the duals.
        const std::size_t l = t.log2_size();
        auto it = out.find(l);
        if (it == out.end()) out.emplace(l, w);
    }
    return out;
}

std::string report_line(const Witness& w) {
    std::ostringstream out;
    out << format_type(w.dual) << " eta=" << w.eta << " pi=";
    Monomial bare(w.monomial.shape(), std::vector<std::uint32_t>(w.monomial.perm()));
    out << emit_permutation(bare) << " signs=";
    bool any = false;
    for (std::size_t k = 0; k < w.monomial.signs().size(); ++k)
        if (w.monomial.signs()[k]) {
            if (any) out << ',';
            out << (w.monomial.shape().alpha + k + 1);
            any = true;
        }
    if (!any) out << '-';
    out << " seed=" << w.seed;
    return out.str();
}

std::string report_lines(const TypeAtlas& atlas) {
    std::string out;
    for (const auto& [t, w] : atlas) {
        out += report_line(w);
        out += '\n';
    }
    return out;
}

Witness parse_report_line(const std::string& line, Shape shape) {
    std::istringstream in(line);
    std::string type_tok, eta_tok, pi_tok, signs_tok, seed_tok;
    if (!(in >> type_tok >> eta_tok >> pi_tok >> signs_tok >> seed_tok))
        throw std::invalid_argument("malformed report line");
    CodeType dual;
    if (std::sscanf(type_tok.c_str(), "(%zu,%zu;%zu,%zu;%zu)", &dual.alpha, &dual.beta,
                    &dual.gamma, &dual.delta, &dual.kappa) != 5)
        throw std::invalid_argument("malformed type in report line");
    auto field = [](const std::string& tok, const char* key) {
        const std::string prefix = std::string(key) + "=";
        if (tok.rfind(prefix, 0) != 0)
            throw std::invalid_argument("malformed report line field");
        return tok.substr(prefix.size());
    };
    Witness w;
    w.dual = dual;
    w.achieved = dual_type(dual);
    w.eta = std::stoull(field(eta_tok, "eta"));
    w.seed = std::stoull(field(seed_tok, "seed"));
    std::string perm_text = field(pi_tok, "pi");
    if (perm_text == "Id") perm_text.clear();
    const std::string signs = field(signs_tok, "signs");
    if (signs != "-") {
        std::istringstream sin(signs);
        std::string p;
        while (std::getline(sin, p, ',')) perm_text += "!" + p;
    }
    w.monomial = parse_permutation(perm_text, shape);
    return w;
}

}  // namespace z2z4
