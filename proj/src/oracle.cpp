#include "naqc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "naqc/optimizer.hpp"

namespace naqc {

namespace {

std::size_t resolve_threads(std::size_t threads, std::size_t trials) {
    if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    return std::min<std::size_t>(threads, std::max<std::size_t>(1, trials / 64));
}

// Run fn(t) for t in [0, trials) across workers on contiguous chunks.
void parallel_trials(std::size_t trials, std::size_t threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& chunk_fn) {
    if (threads <= 1) {
        chunk_fn(0, 0, trials);
        return;
    }
    std::vector<std::thread> workers;
    const std::size_t per = (trials + threads - 1) / threads;
    for (std::size_t w = 0; w < threads; ++w) {
        const std::size_t begin = w * per;
        const std::size_t end = std::min(trials, begin + per);
        if (begin >= end) break;
        workers.emplace_back([&chunk_fn, w, begin, end] { chunk_fn(w, begin, end); });
    }
    for (std::thread& t : workers) t.join();
}

}  // namespace

std::uint64_t SplitMix64::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_double() - 1.0;
        v = 2.0 * next_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SplitMix64::next_below: n must be positive");
    return next_u64() % n;  // bias is negligible for the small n used here
}

DensityMatrix random_state(std::size_t d, StateKind kind, SplitMix64& rng) {
    if (d < 2 || d > 25) throw std::invalid_argument("random_state: d must be in [2, 25]");
    if (kind == StateKind::HaarPure) {
        std::vector<cx> psi(d);
        double norm2 = 0.0;
        for (cx& amp : psi) {
            amp = cx{rng.next_gaussian(), rng.next_gaussian()};
            norm2 += std::norm(amp);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (cx& amp : psi) amp *= inv;
        return DensityMatrix(outer(psi));
    }
    // Ginibre: rho = G G^dag / Tr(G G^dag)
    ComplexMatrix g(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            g(r, c) = cx{rng.next_gaussian(), rng.next_gaussian()};
        }
    }
    ComplexMatrix m = g * g.dagger();
    const double tr = m.trace().real();
    return DensityMatrix(m * cx{1.0 / tr, 0.0});
}

DensityMatrix random_state(std::size_t d, StateKind kind, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_state(d, kind, rng);
}

namespace {

std::vector<double> flat_simplex(std::size_t n, SplitMix64& rng) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
        v = -std::log(1.0 - rng.next_double());
        sum += v;
    }
    for (double& v : w) v /= sum;
    return w;
}

}  // namespace

ModelEnsemble random_ensemble(ModelKind kind, std::size_t d, std::size_t settings,
                              SplitMix64& rng) {
    ModelEnsemble model;
    model.kind = kind;
    const std::size_t n_hidden = 1 + static_cast<std::size_t>(rng.next_below(8));
    const bool deterministic_responses = (rng.next_u64() & 1) != 0;
    const StateKind state_kind =
        (rng.next_u64() & 1) != 0 ? StateKind::HaarPure : StateKind::GinibreMixed;

    model.weights = flat_simplex(n_hidden, rng);
    model.responses.resize(n_hidden);
    model.states.resize(n_hidden);
    for (std::size_t lam = 0; lam < n_hidden; ++lam) {
        model.responses[lam].resize(settings);
        for (std::size_t x = 0; x < settings; ++x) {
            if (deterministic_responses) {
                std::vector<double> row(d, 0.0);
                row[rng.next_below(d)] = 1.0;
                model.responses[lam][x] = std::move(row);
            } else {
                model.responses[lam][x] = flat_simplex(d, rng);
            }
        }
        const std::size_t n_states = (kind == ModelKind::LHS) ? 1 : d;
        model.states[lam].reserve(n_states);
        for (std::size_t i = 0; i < n_states; ++i) {
            model.states[lam].push_back(random_state(d, state_kind, rng));
        }
    }
    return model;
}

LhsTightnessDemo lhs_tightness_demo(const CoherenceMeasure& measure) {
    LhsTightnessDemo demo{product_zero_plus_state(), 0.0};
    const MubFamily fam = rotated_qubit_mubs(0.0, 0.0);
    demo.s_value = s_quantity(steer(demo.state, fam), fam, measure);
    return demo;
}

namespace {

DensityMatrix pure_qubit(const std::vector<cx>& amps) { return DensityMatrix(outer(amps)); }

// 1SQI ensemble with a single hidden value whose state is `state` for every
// outcome; responses follow the Born rule of `state` in the family's bases.
ModelEnsemble constant_state_sqi(const DensityMatrix& state, const MubFamily& fam) {
    ModelEnsemble model;
    model.kind = ModelKind::SQI1;
    model.weights = {1.0};
    model.responses.resize(1);
    model.responses[0].resize(fam.bases.size());
    for (std::size_t x = 0; x < fam.bases.size(); ++x) {
        model.responses[0][x].resize(fam.dim);
        for (std::size_t a = 0; a < fam.dim; ++a) {
            model.responses[0][x][a] =
                (fam.bases[x].projector(a) * state.mat()).trace().real();
        }
    }
    model.states.push_back(std::vector<DensityMatrix>(fam.dim, state));
    return model;
}

}  // namespace

SqiTightnessDemo sqi_tightness_demo(const CoherenceMeasure& measure) {
    const MubFamily fam = rotated_qubit_mubs(0.0, 0.0);  // bases ordered (x, y, z)
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // per-slice hidden states, each fully coherent in the sliced basis:
    // |0> for the x and y slices, |+> for the z slice
    const DensityMatrix zero = pure_qubit({cx{1.0, 0.0}, cx{0.0, 0.0}});
    const DensityMatrix plus = pure_qubit({cx{inv_sqrt2, 0.0}, cx{inv_sqrt2, 0.0}});

    SqiTightnessDemo demo;
    demo.per_k_ensembles = {constant_state_sqi(zero, fam), constant_state_sqi(zero, fam),
                            constant_state_sqi(plus, fam)};
    for (std::size_t k = 0; k < 3; ++k) {
        const Assemblage asm_table = realize(demo.per_k_ensembles[k], fam.bases.size());
        demo.per_k_values[k] = s_quantity_k_term(asm_table, fam, measure, k);
        demo.s_value += demo.per_k_values[k];
    }

    // outcome-independent variant: a single LHS state |0> for every slice
    ModelEnsemble lhs;
    lhs.kind = ModelKind::LHS;
    lhs.weights = {1.0};
    lhs.responses = demo.per_k_ensembles[0].responses;
    lhs.states.push_back({zero});
    demo.lhs_forced_value =
        s_quantity(realize(lhs, fam.bases.size()), fam, measure, IndexPattern::Distinct);
    return demo;
}

SweepResult sweep_models(ModelKind kind, std::size_t d, std::size_t trials, std::uint64_t seed,
                         const CoherenceMeasure& measure, bool inject_tightness_demo,
                         std::size_t threads) {
    if (trials < 1) throw std::invalid_argument("sweep_models: trials must be >= 1");
    const MubFamily fam = mubs_prime_power(d);
    const std::size_t settings = fam.bases.size();

    threads = resolve_threads(threads, trials);
    std::vector<SweepResult> partial(threads);
    parallel_trials(trials, threads, [&](std::size_t worker, std::size_t begin, std::size_t end) {
        SweepResult local;
        local.max_s = -1.0;
        for (std::size_t t = begin; t < end; ++t) {
            SplitMix64 rng(seed + t);
            ModelEnsemble model = random_ensemble(kind, d, settings, rng);
            const double s = s_quantity(realize(model, settings), fam, measure);
            if (s > local.max_s) {
                local.max_s = s;
                local.argmax_seed = seed + t;
                local.argmax = std::move(model);
            }
        }
        partial[worker] = std::move(local);
    });
    // merge so the winner is the lowest trial index attaining the exact max,
    // matching a serial left-to-right scan for any worker count
    SweepResult result;
    result.max_s = -1.0;
    for (SweepResult& local : partial) {
        if (!local.argmax) continue;
        if (local.max_s > result.max_s ||
            (local.max_s == result.max_s && local.argmax_seed < result.argmax_seed)) {
            result = std::move(local);
        }
    }

    if (inject_tightness_demo && d == 2) {
        if (kind == ModelKind::LHS) {
            // the product state realized as an explicit one-point LHS ensemble
            const DensityMatrix plus =
                partial_trace(product_zero_plus_state(), Subsystem::B);
            ModelEnsemble model;
            model.kind = ModelKind::LHS;
            model.weights = {1.0};
            model.responses.resize(1);
            const DensityMatrix alice = pure_qubit({cx{1.0, 0.0}, cx{0.0, 0.0}});
            for (const Basis& b : fam.bases) {
                std::vector<double> row(2);
                for (std::size_t a = 0; a < 2; ++a) {
                    row[a] = (b.projector(a) * alice.mat()).trace().real();
                }
                model.responses[0].push_back(std::move(row));
            }
            model.states.push_back({plus});
            const double s = s_quantity(realize(model, settings), fam, measure);
            if (s >= result.max_s) {
                result.max_s = s;
                result.argmax_seed = seed + trials;
                result.argmax = std::move(model);
            }
        } else {
            const SqiTightnessDemo demo = sqi_tightness_demo(measure);
            if (demo.s_value >= result.max_s) {
                result.max_s = demo.s_value;
                result.argmax_seed = seed + trials;
                result.argmax = demo.per_k_ensembles[0];
            }
        }
    }
    return result;
}

QuantumSweepResult sweep_quantum_states(std::size_t trials, std::uint64_t seed,
                                        const CoherenceMeasure& measure,
                                        std::size_t refine_top, std::size_t threads) {
    if (trials < 1) throw std::invalid_argument("sweep_quantum_states: trials must be >= 1");
    const MubFamily fam = rotated_qubit_mubs(0.0, 0.0);

    auto make_state = [&](std::uint64_t trial_seed) {
        SplitMix64 rng(trial_seed);
        const StateKind kind =
            (rng.next_u64() & 1) != 0 ? StateKind::HaarPure : StateKind::GinibreMixed;
        return random_state(4, kind, rng).with_dims(2, 2);
    };

    QuantumSweepResult result;
    std::vector<std::pair<double, std::uint64_t>> scored(trials);  // (canonical S, trial seed)
    parallel_trials(trials, resolve_threads(threads, trials),
                    [&](std::size_t, std::size_t begin, std::size_t end) {
                        for (std::size_t t = begin; t < end; ++t) {
                            const std::uint64_t trial_seed = seed + t;
                            const DensityMatrix rho = make_state(trial_seed);
                            scored[t] = {s_quantity(steer(rho, fam), fam, measure), trial_seed};
                        }
                    });
    for (const auto& [s, trial_seed] : scored) {
        if (s > result.max_s_unrefined) {
            result.max_s_unrefined = s;
            result.argmax_seed = trial_seed;
        }
    }
    result.max_s = result.max_s_unrefined;

    const std::size_t top = std::min(refine_top, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + top, scored.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 0; i < top; ++i) {
        const DensityMatrix rho = make_state(scored[i].second);
        const OptResult opt = optimize_s(rho, measure);
        ++result.refined;
        if (opt.s_max > result.max_s) {
            result.max_s = opt.s_max;
            result.argmax_seed = scored[i].second;
        }
    }
    return result;
}

}  // namespace naqc
