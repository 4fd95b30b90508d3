#include "twdl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "twdl/bounds.hpp"
#include "twdl/extraction.hpp"
#include "twdl/generators.hpp"
#include "twdl/graph.hpp"
#include "twdl/interval.hpp"
#include "twdl/ktree.hpp"
#include "twdl/oracles.hpp"
#include "twdl/rational.hpp"
#include "twdl/rng.hpp"
#include "twdl/treewidth.hpp"

namespace twdl {

namespace {

using Clock = std::chrono::steady_clock;

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
    char buf[192];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return std::string(buf);
}

/// Deferred check: descriptors are built up front (cheaply) so a skipped
/// instance still gets a fully identified record.
struct Instance {
    std::string theorem;
    std::string instance;
    std::function<void(VerifyRecord&)> run;
};

void add(std::vector<Instance>& out, const char* theorem, std::string instance,
         std::function<void(VerifyRecord&)> run) {
    out.push_back({theorem, std::move(instance), std::move(run)});
}

int worker_cap() {
    if (const char* env = std::getenv("TWDL_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) {
            return v;
        }
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 4;
}

std::vector<VerifyRecord> execute(const std::vector<Instance>& instances,
                                  Clock::time_point deadline) {
    std::vector<VerifyRecord> records(instances.size());
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= instances.size()) {
                break;
            }
            VerifyRecord& rec = records[i];
            rec.theorem = instances[i].theorem;
            rec.instance = instances[i].instance;
            if (Clock::now() >= deadline) {
                rec.status = "skip";
                rec.note = "budget exhausted";
                continue;
            }
            try {
                instances[i].run(rec);
            } catch (const std::exception& e) {
                rec.status = "fail";
                rec.note = std::string("exception: ") + e.what();
            }
        }
    };
    int workers = static_cast<int>(
        std::min<std::size_t>(instances.size(), static_cast<std::size_t>(worker_cap())));
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(body);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return records;
}

void sort_records(std::vector<VerifyRecord>& records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const VerifyRecord& a, const VerifyRecord& b) {
                         if (a.theorem != b.theorem) {
                             return a.theorem < b.theorem;
                         }
                         return a.instance < b.instance;
                     });
}

void set_status(VerifyRecord& rec, bool ok) { rec.status = ok ? "pass" : "fail"; }

// ---- criterion 1: t-set equality on path powers --------------------------

void build_c1(std::vector<Instance>& out, std::uint64_t) {
    const char* id = "tset-equality";
    for (int k = 1; k <= 3; ++k) {
        for (int n = k + 1; n <= 15; ++n) {
            if (n % (k + 1) != 0) {
                continue;
            }
            for (int t = 0; t <= k; ++t) {
                add(out, id, fmt("k=%d n=%02d t=%d", k, n, t), [k, n, t](VerifyRecord& rec) {
                    Graph g = gen_path_power(n, k);
                    BoundValue b = bound_tset(n, k, t);
                    OracleResult oracle = oracle_alpha_t(g, t);
                    TSetResult ex = extract_tset(g, k, t);
                    rec.expected = b.value.str();
                    rec.observed = std::to_string(oracle.value);
                    rec.note = fmt("extract=%lld witness_width=%d",
                                   static_cast<long long>(ex.vertices.size()), ex.witness.width);
                    set_status(rec, Rational(oracle.value) == b.value
                                        && Rational(static_cast<long long>(ex.vertices.size()))
                                               >= b.value
                                        && ex.witness.width <= t);
                });
            }
        }
    }
}

// ---- criterion 2: degree-d survivor count of the clique-attach family ----

void build_c2(std::vector<Instance>& out, std::uint64_t) {
    const char* id = "kset-construction";
    for (int k = 1; k <= 3; ++k) {
        for (int d = 2 * k - 1; d <= 2 * k + 3; ++d) {
            for (int s = 0; s <= 4; ++s) {
                add(out, id, fmt("k=%d d=%d s=%d", k, d, s), [k, d, s](VerifyRecord& rec) {
                    Graph g = gen_kset_extremal(k, d, s);
                    int rr = d - 2 * k + 1;
                    long long n = g.vertex_count();
                    long long expect_vd = static_cast<long long>(rr) * s + 2 * k;
                    std::vector<int> vd = vd_set(g, d);
                    BoundValue up = bound_kset_upper(n, k, d);
                    BoundValue lo = bound_kset_lower(n, k, d);
                    Rational gap = up.value - lo.value;
                    rec.expected = std::to_string(expect_vd);
                    rec.observed = std::to_string(static_cast<long long>(vd.size()));
                    rec.note = fmt("n=%lld gap=", n) + gap.str();
                    set_status(rec,
                               static_cast<long long>(vd.size()) == expect_vd
                                   && up.applicable && lo.applicable
                                   && up.value == Rational(expect_vd)
                                   && gap == Rational(static_cast<long long>(k) * (k - 1),
                                                      d + 1 - k)
                                   && gap <= Rational(k - 1));
                });
            }
        }
    }
}

// ---- criterion 3: clique degree floor on random k-trees ------------------

void build_c3(std::vector<Instance>& out, std::uint64_t seed) {
    const char* id = "clique-degrees";
    for (int k = 1; k <= 4; ++k) {
        for (int i = 0; i < 1000; ++i) {
            std::uint64_t seed_i =
                derive_seed(seed, 3, static_cast<std::uint64_t>(k) * 1000000 + i);
            add(out, id, fmt("k=%d i=%04d", k, i), [k, i, seed_i](VerifyRecord& rec) {
                Rng rng(seed_i);
                // The first k instances pin n to {k+1..2k} so the small-n
                // branch of the degree floor is always exercised.
                int n = i < k ? k + 1 + i
                              : k + 1 + static_cast<int>(rng.below(16 - k));
                Graph g = gen_random_ktree(k, n, rng.raw());
                CliqueDegreeCheck chk = check_clique_degree_theorem(g, k);
                rec.expected = "no clique below the degree floor";
                rec.observed =
                    chk.ok ? "none"
                           : fmt("violating clique of size %d",
                                 static_cast<int>(chk.counterexample.size()));
                rec.note = fmt("n=%d", n);
                set_status(rec, chk.ok);
            });
        }
    }
}

// ---- criterion 4: treewidth of the low-degree subgraph -------------------

void build_c4(std::vector<Instance>& out, std::uint64_t seed) {
    const char* id = "low-degree-treewidth";
    for (int k = 1; k <= 4; ++k) {
        for (int i = 0; i < 500; ++i) {
            std::uint64_t seed_i =
                derive_seed(seed, 4, static_cast<std::uint64_t>(k) * 1000000 + i);
            add(out, id, fmt("k=%d i=%04d", k, i), [k, seed_i](VerifyRecord& rec) {
                Rng rng(seed_i);
                int n = 2 * k + 2 + static_cast<int>(rng.below(15 - 2 * k));
                Graph g = gen_random_ktree(k, n, rng.raw());
                bool ok = true;
                std::string bad;
                for (int l = k; l <= 2 * k && ok; ++l) {
                    InducedSubgraph sub = induced_subgraph(g, vd_set(g, l));
                    int w = treewidth_exact(sub.graph).width;
                    if (w > l - k) {
                        ok = false;
                        bad = fmt("l=%d width=%d > %d", l, w, l - k);
                    }
                }
                rec.expected = "width(degree-<=l subgraph) <= l-k for every l in {k..2k}";
                rec.observed = ok ? "holds for all l" : bad;
                rec.note = fmt("n=%d", n);
                set_status(rec, ok);
            });
        }
    }

    // Dropping the k-tree hypothesis breaks the guarantee: a clique with a
    // pendant path has treewidth k but its low-degree subgraph stays wide.
    for (int k = 2; k <= 4; ++k) {
        add(out, id, fmt("ce-clique-path k=%d", k), [k](VerifyRecord& rec) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u <= k; ++u) {
                for (int v = u + 1; v <= k; ++v) {
                    edges.push_back({u, v});
                }
            }
            edges.push_back({0, k + 1});
            for (int p = k + 1; p < 2 * k; ++p) {
                edges.push_back({p, p + 1});
            }
            Graph g = build_graph(2 * k + 1, edges);
            bool ok = treewidth_exact(g).width == k
                   && !ktree_elimination_order(g, k).has_value();
            for (int l = k; l <= 2 * k - 1 && ok; ++l) {
                InducedSubgraph sub = induced_subgraph(g, vd_set(g, l));
                ok = treewidth_exact(sub.graph).width > l - k;
            }
            rec.expected = "bound fails for every l in {k..2k-1} on a non-k-tree of treewidth k";
            rec.observed = ok ? "violations observed" : "bound unexpectedly held";
            set_status(rec, ok);
        });
    }

    // n >= l+2 is also needed: l+1-k vertices added onto one k-clique give
    // an (l+1)-vertex k-tree with max degree l whose whole vertex set stays
    // at treewidth k.
    for (int k = 1; k <= 4; ++k) {
        for (int l = k; l <= 2 * k - 1; ++l) {
            add(out, id, fmt("ce-small k=%d l=%d", k, l), [k, l](VerifyRecord& rec) {
                std::vector<std::pair<int, int>> edges;
                for (int u = 0; u < k; ++u) {
                    for (int v = u + 1; v < k; ++v) {
                        edges.push_back({u, v});
                    }
                }
                for (int w = k; w <= l; ++w) {
                    for (int u = 0; u < k; ++u) {
                        edges.push_back({w, u});
                    }
                }
                Graph g = build_graph(l + 1, edges);
                int maxdeg = 0;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    maxdeg = std::max(maxdeg, g.degree(v));
                }
                InducedSubgraph sub = induced_subgraph(g, vd_set(g, l));
                int w = treewidth_exact(sub.graph).width;
                bool ok = ktree_elimination_order(g, k).has_value() && maxdeg == l
                       && sub.graph.vertex_count() == l + 1 && w == k && k > l - k;
                rec.expected = fmt("treewidth %d above the bound %d on l+1 vertices", k, l - k);
                rec.observed = fmt("treewidth %d, max degree %d", w, maxdeg);
                set_status(rec, ok);
            });
        }
    }
}

// ---- criterion 5: degree-d t-set floor on random k-trees -----------------

void build_c5(std::vector<Instance>& out, std::uint64_t seed) {
    const char* id = "dtset-lower";
    for (int k = 1; k <= 3; ++k) {
        for (int i = 0; i < 500; ++i) {
            std::uint64_t seed_i =
                derive_seed(seed, 5, static_cast<std::uint64_t>(k) * 1000000 + i);
            add(out, id, fmt("k=%d i=%04d", k, i), [k, seed_i](VerifyRecord& rec) {
                Rng rng(seed_i);
                int n = 2 * k + 1 + static_cast<int>(rng.below(16 - 2 * k));
                Graph g = gen_random_ktree(k, n, rng.raw());
                bool ok = true;
                std::string bad;
                for (int t = 0; t <= k && ok; ++t) {
                    for (int d = 2 * k; d <= 2 * k + 2 && ok; ++d) {
                        BoundValue b = bound_dtset_lower(n, k, t, d);
                        DegreeTSetResult ex = extract_degree_d_tset(g, k, t, d);
                        OracleResult oracle = oracle_alpha_d_t(g, d, t);
                        bool here = b.applicable && ex.bound_applicable
                                 && static_cast<long long>(ex.tset.vertices.size())
                                        >= b.value.ceil()
                                 && Rational(oracle.value) >= b.value;
                        if (!here) {
                            ok = false;
                            bad = fmt("t=%d d=%d extract=%lld oracle=%lld bound=", t, d,
                                      static_cast<long long>(ex.tset.vertices.size()),
                                      oracle.value)
                                + b.value.str();
                        }
                    }
                }
                rec.expected = "extract >= ceil(bound) and oracle >= bound for every (t, d)";
                rec.observed = ok ? "all combinations hold" : bad;
                rec.note = fmt("n=%d", n);
                set_status(rec, ok);
            });
        }
    }
}

// ---- criterion 6: block construction ceiling ------------------------------

void build_c6(std::vector<Instance>& out, std::uint64_t) {
    const char* id = "dtset-upper";
    const std::vector<std::pair<int, int>> cases = {{1, 2}, {2, 4}, {2, 6}, {3, 11}};
    for (auto [k, d] : cases) {
        long long twice_r = 2LL * (d - 2 * k + 1);
        long long step = static_cast<long long>(k) * (k + 1);
        bool constructible = twice_r > 0 && twice_r % step == 0;
        if (!constructible) {
            add(out, id, fmt("k=%d d=%02d", k, d), [k, d](VerifyRecord& rec) {
                bool gen_refused = false;
                try {
                    gen_block_ktree(k, d, 2 * k + 3);
                } catch (const std::invalid_argument&) {
                    gen_refused = true;
                }
                BlockUpperBound ub = bound_dtset_upper(4 * k, k, 0, d);
                rec.expected = "no construction for these parameters";
                rec.observed = gen_refused && !ub.bound.applicable
                                   ? "generator and evaluator both refuse"
                                   : "construction unexpectedly exists";
                rec.note = "vacuous here: 2(d-2k+1) is not a positive multiple of k(k+1); "
                           "the nearest constructible case for k=2 is d=6, checked separately";
                set_status(rec, gen_refused && !ub.bound.applicable);
            });
            continue;
        }
        for (int n0 = 2 * k + 3; n0 <= 2 * k + 6; ++n0) {
            for (int t = 0; t <= k - 1; ++t) {
                add(out, id, fmt("k=%d d=%02d n0=%02d t=%d", k, d, n0, t),
                    [k, d, n0, t](VerifyRecord& rec) {
                        BlockParams params = block_ktree_params(k, d, n0);
                        Graph g = gen_block_ktree(k, d, n0);
                        long long count = static_cast<long long>(t + 1)
                                        * (static_cast<long long>(params.r) * (n0 - (k + 3)) + 2);
                        OracleResult oracle = oracle_alpha_d_t(g, d, t);
                        BlockUpperBound ub = bound_dtset_upper(params.n, k, t, d);
                        rec.expected = fmt("<= %lld", count);
                        rec.observed = std::to_string(oracle.value);
                        rec.note = fmt("n=%d r=%d%s", params.n, params.r,
                                       oracle.value == count ? " attained" : "");
                        set_status(rec,
                                   g.vertex_count() == params.n && oracle.value <= count
                                       && ub.bound.applicable && ub.n0 == n0
                                       && ub.count == count
                                       && ub.bound.value == Rational(count));
                    });
            }
        }
    }
}

// ---- criterion 7: tree family bound and its extremal shapes --------------

void build_c7(std::vector<Instance>& out, std::uint64_t) {
    const char* id = "tree-extremal";
    for (int n = 5; n <= 10; ++n) {
        auto trees = std::make_shared<const std::vector<Graph>>(enumerate_trees(n));
        for (int d = 2; d <= 3; ++d) {
            for (std::size_t i = 0; i < trees->size(); ++i) {
                add(out, id, fmt("n=%02d d=%d i=%03d", n, d, static_cast<int>(i)),
                    [n, d, i, trees](VerifyRecord& rec) {
                        const Graph& t = (*trees)[i];
                        long long alpha = oracle_alpha_d_t(t, d, 0).value;
                        TreeBound tb = bound_tree(n, d);
                        bool extremal = is_alpha_d_extremal_structure(t, d);
                        bool meets = Rational(alpha) == tb.bound.value;
                        rec.expected = ">= " + tb.bound.value.str() + ", equality iff extremal shape";
                        rec.observed = fmt("alpha=%lld, %s", alpha,
                                           extremal ? "extremal" : "not extremal");
                        set_status(rec, Rational(alpha) >= tb.bound.value && extremal == meets);
                    });
            }
            add(out, id, fmt("family n=%02d d=%d", n, d), [n, d, trees](VerifyRecord& rec) {
                TreeBound tb = bound_tree(n, d);
                long long best = -1;
                bool any_extremal = false;
                for (const Graph& t : *trees) {
                    long long alpha = oracle_alpha_d_t(t, d, 0).value;
                    if (best < 0 || alpha < best) {
                        best = alpha;
                    }
                    if (is_alpha_d_extremal_structure(t, d)) {
                        any_extremal = true;
                    }
                }
                bool ok = tb.extremal_exists
                              ? tb.bound.value.is_integer()
                                    && Rational(best) == tb.bound.value && any_extremal
                              : Rational(best) > tb.bound.value && !any_extremal;
                rec.expected = (tb.extremal_exists ? "family minimum " : "family minimum > ")
                             + tb.bound.value.str();
                rec.observed = fmt("family minimum %lld%s", best,
                                   any_extremal ? ", extremal shape present" : "");
                rec.note = fmt("%d trees", static_cast<int>(trees->size()));
                set_status(rec, ok);
            });
        }
        add(out, id, fmt("path n=%02d", n), [n](VerifyRecord& rec) {
            Graph p = gen_path_power(n, 1);
            long long alpha = oracle_alpha_d_t(p, 1, 0).value;
            rec.expected = "2";
            rec.observed = std::to_string(alpha);
            rec.note = "a degree cap below 2k pins the value at the two endpoints";
            set_status(rec, alpha == 2);
        });
    }
}

// ---- criterion 8: outerplanar construction ---------------------------------

void build_c8(std::vector<Instance>& out, std::uint64_t) {
    const char* id = "outerplanar";
    add(out, id, "d=8 n0=06 exact", [](VerifyRecord& rec) {
        Graph g = gen_outerplanar_extremal(8, 6);
        long long count = 2LL * (6 - 4) + 3;
        OracleResult oracle = oracle_alpha_d_t(g, 8, 0);
        BoundValue up = bound_outerplanar_upper(g.vertex_count(), 8);
        BoundValue lo = bound_outerplanar_lower(g.vertex_count(), 8);
        rec.expected = std::to_string(count);
        rec.observed = std::to_string(oracle.value);
        rec.note = fmt("n=%d", g.vertex_count());
        set_status(rec, g.vertex_count() == 20 && oracle.value == count && up.applicable
                            && up.value == Rational(count)
                            && lo.value <= Rational(oracle.value)
                            && lo.value == bound_dtset_lower_sharp(20, 2, 0, 8));
    });
    const std::vector<std::pair<int, int>> sandwich = {{6, 6}, {6, 7}, {6, 8}, {8, 7}};
    for (auto [d, n0] : sandwich) {
        add(out, id, fmt("d=%d n0=%02d", d, n0), [d, n0](VerifyRecord& rec) {
            Graph g = gen_outerplanar_extremal(d, n0);
            long long r = (d - 4) / 2;
            long long count = r * (n0 - 4) + 3;
            OracleResult oracle = oracle_alpha_d_t(g, d, 0);
            BoundValue up = bound_outerplanar_upper(g.vertex_count(), d);
            BoundValue lo = bound_outerplanar_lower(g.vertex_count(), d);
            rec.expected = "between " + lo.value.str() + " and " + std::to_string(count);
            rec.observed = std::to_string(oracle.value);
            rec.note = fmt("n=%d", g.vertex_count());
            set_status(rec, lo.applicable && lo.value <= Rational(oracle.value)
                                && oracle.value <= count && up.applicable
                                && up.value == Rational(count));
        });
    }
}

// ---- criterion 9: interval bounded-degree maximum independent sets -------

void build_c9(std::vector<Instance>& out, std::uint64_t seed) {
    const char* id = "interval-mis";
    for (int k = 1; k <= 3; ++k) {
        for (int i = 0; i < 1000; ++i) {
            std::uint64_t seed_i =
                derive_seed(seed, 9, static_cast<std::uint64_t>(k) * 1000000 + i);
            add(out, id, fmt("k=%d i=%04d", k, i), [k, seed_i](VerifyRecord& rec) {
                Rng rng(seed_i);
                int n = 2 + static_cast<int>(rng.below(19));
                IntervalModel model = gen_interval_random(n, k, rng.raw());
                Graph g = intersection_graph(model);
                std::vector<int> mis = interval_bounded_degree_mis(model, k);
                OracleResult alpha = oracle_alpha(g);
                int max_deg = 0;
                for (int v : mis) {
                    max_deg = std::max(max_deg, g.degree(v));
                }
                rec.expected = fmt("size %lld with degrees <= %d", alpha.value, 2 * k);
                rec.observed = fmt("size %lld, max degree %d",
                                   static_cast<long long>(mis.size()), max_deg);
                rec.note = fmt("n=%d", n);
                set_status(rec, static_cast<long long>(mis.size()) == alpha.value
                                    && max_deg <= 2 * k);
            });
        }
        for (int n : {3 * (k + 1), 14}) {
            add(out, id, fmt("k=%d tight n=%02d", k, n), [k, n](VerifyRecord& rec) {
                IntervalModel model = gen_interval_path_power(n, k);
                Graph g = intersection_graph(model);
                std::vector<int> vd = vd_set(g, 2 * k - 1);
                OracleResult limited = oracle_alpha_d_t(g, 2 * k - 1, 0);
                OracleResult full = oracle_alpha(g);
                rec.expected = fmt("%d low-degree vertices, capped value 2 below alpha", 2 * k);
                rec.observed = fmt("%d low-degree vertices, capped value %lld, alpha %lld",
                                   static_cast<int>(vd.size()), limited.value, full.value);
                set_status(rec, static_cast<int>(vd.size()) == 2 * k && limited.value == 2
                                    && full.value > limited.value);
            });
        }
    }
}

// ---- criterion 10: size of the low-degree set -----------------------------

void build_c10(std::vector<Instance>& out, std::uint64_t seed) {
    const char* id = "vd-size";
    for (int k = 1; k <= 4; ++k) {
        for (int i = 0; i < 500; ++i) {
            std::uint64_t seed_i =
                derive_seed(seed, 10, static_cast<std::uint64_t>(k) * 1000000 + i);
            add(out, id, fmt("k=%d i=%04d", k, i), [k, seed_i](VerifyRecord& rec) {
                Rng rng(seed_i);
                int n = k + 1 + static_cast<int>(rng.below(16 - k));
                Graph g = gen_random_ktree(k, n, rng.raw());
                Rational avg = Rational(2 * k) - Rational(static_cast<long long>(k) * (k + 1), n);
                bool ok = avg == Rational(2 * g.edge_count(), n);
                std::string bad = ok ? "" : "average degree mismatch";
                for (int d = k; d <= 2 * k + 2 && ok; ++d) {
                    BoundValue b = bound_vd_lower(n, k, avg, d);
                    long long size = static_cast<long long>(vd_set(g, d).size());
                    if (!b.applicable || Rational(size) < b.value) {
                        ok = false;
                        bad = fmt("d=%d size=%lld bound=", d, size) + b.value.str();
                    }
                }
                rec.expected = "low-degree set at least the bound for every d in {k..2k+2}";
                rec.observed = ok ? "holds for all d" : bad;
                rec.note = fmt("n=%d", n);
                set_status(rec, ok);
            });
        }
    }
}

std::vector<Instance> build_criterion(int number, std::uint64_t seed) {
    std::vector<Instance> out;
    switch (number) {
        case 1: build_c1(out, seed); break;
        case 2: build_c2(out, seed); break;
        case 3: build_c3(out, seed); break;
        case 4: build_c4(out, seed); break;
        case 5: build_c5(out, seed); break;
        case 6: build_c6(out, seed); break;
        case 7: build_c7(out, seed); break;
        case 8: build_c8(out, seed); break;
        case 9: build_c9(out, seed); break;
        case 10: build_c10(out, seed); break;
        default: throw std::invalid_argument("unknown criterion number");
    }
    return out;
}

long long count_status(const std::vector<VerifyRecord>& records, const char* status) {
    return std::count_if(records.begin(), records.end(),
                         [status](const VerifyRecord& r) { return r.status == status; });
}

} // namespace

long long VerifyReport::pass_count() const { return count_status(records, "pass"); }
long long VerifyReport::fail_count() const { return count_status(records, "fail"); }
long long VerifyReport::skip_count() const { return count_status(records, "skip"); }

const std::vector<CriterionInfo>& criteria() {
    static const std::vector<CriterionInfo> list = {
        {1, "tset-equality", "tset"},
        {2, "kset-construction", "kset"},
        {3, "clique-degrees", "clique-degrees"},
        {4, "low-degree-treewidth", "bounded-treewidth"},
        {5, "dtset-lower", "dtset"},
        {6, "dtset-upper", "dtset"},
        {7, "tree-extremal", "trees"},
        {8, "outerplanar", "outerplanar"},
        {9, "interval-mis", "interval"},
        {10, "vd-size", "kset"},
    };
    return list;
}

std::vector<VerifyRecord> run_criterion(int number, std::uint64_t seed) {
    std::vector<Instance> instances = build_criterion(number, seed);
    std::vector<VerifyRecord> records = execute(instances, Clock::time_point::max());
    sort_records(records);
    return records;
}

VerifyReport run_suite(const std::string& suite, std::uint64_t seed, double budget_seconds) {
    auto t0 = Clock::now();
    std::vector<int> numbers;
    for (const CriterionInfo& c : criteria()) {
        if (suite == "all" || suite == c.suite) {
            numbers.push_back(c.number);
        }
    }
    if (numbers.empty()) {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    Clock::time_point deadline = Clock::time_point::max();
    if (budget_seconds >= 0) {
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget_seconds));
    }

    std::vector<Instance> instances;
    for (int num : numbers) {
        std::vector<Instance> part = build_criterion(num, seed);
        std::move(part.begin(), part.end(), std::back_inserter(instances));
    }

    VerifyReport report;
    report.suite = suite;
    report.seed = seed;
    report.budget_seconds = budget_seconds;
    report.records = execute(instances, deadline);
    sort_records(report.records);
    report.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
}

std::string report_to_json(const VerifyReport& report, bool include_runtime) {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    if (report.budget_seconds >= 0) {
        j["budget_seconds"] = report.budget_seconds;
    } else {
        j["budget_seconds"] = nullptr;
    }
    j["pass"] = report.pass_count();
    j["fail"] = report.fail_count();
    j["skip"] = report.skip_count();
    j["passed"] = report.all_passed();
    nlohmann::json arr = nlohmann::json::array();
    for (const VerifyRecord& r : report.records) {
        arr.push_back({{"theorem", r.theorem},
                       {"instance", r.instance},
                       {"expected", r.expected},
                       {"observed", r.observed},
                       {"status", r.status},
                       {"note", r.note}});
    }
    j["records"] = std::move(arr);
    if (include_runtime) {
        j["runtime_seconds"] = report.runtime_seconds;
    }
    return j.dump(2) + "\n";
}

} // namespace twdl
