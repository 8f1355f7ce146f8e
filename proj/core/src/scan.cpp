#include "segrelab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "segrelab/errors.hpp"
#include "segrelab/positivity.hpp"

namespace segrelab {

namespace {

using Cell = std::vector<std::int64_t>;

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates fn on every cell. Each result lands in its own slot, so the
// row order is the cell order whatever the scheduling.
template <class Fn>
std::vector<ScanRow> run_cells(const std::vector<Cell>& cells, unsigned workers, Fn fn) {
    std::vector<ScanRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    constexpr std::size_t chunk = 64;
    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::size_t>(workers, (cells.size() + chunk - 1) / chunk));
    std::vector<std::exception_ptr> errors(std::max(1u, n_threads));
    auto work = [&](unsigned id) {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= cells.size()) {
                    return;
                }
                const std::size_t end = std::min(cells.size(), begin + chunk);
                for (std::size_t i = begin; i < end; ++i) {
                    rows[i] = fn(cells[i]);
                }
            }
        } catch (...) {
            errors[id] = std::current_exception();
            next.store(cells.size());
        }
    };
    if (n_threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned id = 0; id < n_threads; ++id) {
            pool.emplace_back(work, id);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

// Lexicographic product of the axes; cells rejected by keep are skipped.
template <class Keep>
std::vector<Cell> product(const std::vector<IntRange>& axes, Keep keep) {
    std::vector<Cell> out;
    if (std::any_of(axes.begin(), axes.end(), [](const IntRange& a) { return a.empty(); })) {
        return out;
    }
    Cell cur;
    cur.reserve(axes.size());
    for (const auto& a : axes) {
        cur.push_back(a.lo);
    }
    for (;;) {
        if (keep(cur)) {
            out.push_back(cur);
        }
        std::size_t i = axes.size();
        while (i > 0) {
            --i;
            if (cur[i] < axes[i].hi) {
                ++cur[i];
                break;
            }
            cur[i] = axes[i].lo;
            if (i == 0) {
                return out;
            }
        }
        if (axes.empty()) {
            return out;
        }
    }
}

int as_k(std::int64_t k) {
    if (k < 0 || k > 100000) {
        throw DomainError("k out of range: " + std::to_string(k));
    }
    return static_cast<int>(k);
}

BigRational q(std::int64_t v) { return make_rational(v); }

ScanRow row_from(std::vector<BigRational> inputs, const CriterionVerdict& v, std::vector<bool> extra_flags = {}) {
    ScanRow row;
    row.inputs = std::move(inputs);
    row.value = v.segre;
    for (const auto& f : v.flags) {
        row.flags.push_back(f.holds);
    }
    row.flags.insert(row.flags.end(), extra_flags.begin(), extra_flags.end());
    return row;
}

ScanReport make_report(std::string scan, std::vector<std::pair<std::string, std::string>> grid,
                       const ScanOptions& opts) {
    ScanReport rep;
    rep.metadata.scan = std::move(scan);
    rep.metadata.grid = std::move(grid);
    rep.metadata.seed = opts.seed;
    rep.metadata.timestamp = opts.timestamp;
    return rep;
}

std::size_t flag_index(const ScanReport& rep, std::string_view name) {
    auto it = std::find(rep.flag_columns.begin(), rep.flag_columns.end(), name);
    if (it == rep.flag_columns.end()) {
        throw std::logic_error("unknown flag column " + std::string(name));
    }
    return static_cast<std::size_t>(it - rep.flag_columns.begin());
}

void add_criterion(ScanReport& rep, std::string name, const std::vector<std::string_view>& flags) {
    ScanCriterion c;
    c.name = std::move(name);
    for (auto f : flags) {
        c.flag_indices.push_back(flag_index(rep, f));
    }
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const ScanRow& row = rep.rows[i];
        const bool covered =
            std::all_of(c.flag_indices.begin(), c.flag_indices.end(), [&](std::size_t j) { return row.flags[j]; });
        if (!covered) {
            continue;
        }
        ++c.covered;
        if (!row.value.positive()) {
            ++c.violations;
            if (!c.first_violation) {
                c.first_violation = i;
            }
        }
    }
    rep.criteria.push_back(std::move(c));
}

std::string half_range(IntRange d) {
    if (d.empty()) {
        return IntRange{d.lo, d.hi}.str();
    }
    return to_string(make_rational(d.lo, 2)) + ".." + to_string(make_rational(d.hi, 2)) + " step 1/2";
}

}  // namespace

std::string IntRange::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

const ScanCriterion& ScanReport::criterion(std::string_view name) const {
    for (const auto& c : criteria) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range("no criterion named " + std::string(name));
}

ScanReport scan_enriques(IntRange r, IntRange k, IntRange chi_margin, IntRange delta_halves, const ScanOptions& opts) {
    const unsigned workers = resolve_workers(opts.workers);
    ScanReport rep = make_report("enriques",
                                 {{"r", r.str()},
                                  {"k", k.str()},
                                  {"chi - (r+2)k", chi_margin.str()},
                                  {"delta", half_range(delta_halves)}},
                                 opts);
    rep.metadata.filters = {"r >= 1", "k >= 0", "2 delta = r + 1 mod 2"};
    rep.input_columns = {"r", "k", "delta", "chi"};
    rep.flag_columns = {"rank_odd", "chi_ge_(r+2)k", "chi_ge_2k(r+1)", "chi_ge_(5r/4+2)k", "delta_ge_0"};

    const auto cells = product({r, k, delta_halves, chi_margin}, [](const Cell& c) {
        return c[0] >= 1 && c[1] >= 0 && (((c[2] - c[0] - 1) % 2) == 0);
    });
    rep.rows = run_cells(cells, workers, [](const Cell& c) {
        const std::int64_t rank = c[0];
        const std::int64_t kk = c[1];
        const BigRational d = make_rational(c[2], 2);
        const std::int64_t chi = (rank + 2) * kk + c[3];
        ScanRow row;
        row.inputs = {q(rank), q(kk), d, q(chi)};
        row.value = segre_closed(GeometryKind::Enriques, rank, chi, d, as_k(kk));
        row.flags = {rank % 2 == 1, chi >= (rank + 2) * kk, chi >= 2 * kk * (rank + 1), 4 * chi >= (5 * rank + 8) * kk,
                     d >= 0};
        return row;
    });
    add_criterion(rep, "(r+2)k bound", {"chi_ge_(r+2)k", "delta_ge_0"});
    add_criterion(rep, "odd-rank theorem", {"rank_odd", "chi_ge_2k(r+1)", "delta_ge_0"});
    add_criterion(rep, "conjecture", {"chi_ge_(5r/4+2)k", "delta_ge_0"});

    SideTable thresholds;
    thresholds.name = "thresholds";
    thresholds.columns = {"r", "k", "delta", "min_positive_chi", "(r+2)k", "(5r/4+2)k"};
    // Rows sharing (r, k, delta) are contiguous with chi increasing.
    std::size_t i = 0;
    while (i < rep.rows.size()) {
        std::size_t j = i;
        while (j < rep.rows.size() && std::equal(rep.rows[j].inputs.begin(), rep.rows[j].inputs.begin() + 3,
                                                 rep.rows[i].inputs.begin())) {
            ++j;
        }
        std::optional<std::size_t> from;
        for (std::size_t t = j; t > i; --t) {
            if (!rep.rows[t - 1].value.positive()) {
                break;
            }
            from = t - 1;
        }
        const auto& in = rep.rows[i].inputs;
        thresholds.rows.push_back({to_string(in[0]), to_string(in[1]), to_string(in[2]),
                                   from ? to_string(rep.rows[*from].inputs[3]) : std::string("none"),
                                   to_string(BigRational((in[0] + 2) * in[1])),
                                   to_string(BigRational((5 * in[0] / 4 + 2) * in[1]))});
        i = j;
    }
    rep.tables.push_back(std::move(thresholds));
    return rep;
}

ScanReport scan_k_trivial(GeometryKind kind, IntRange r, IntRange k, IntRange chi_margin, IntRange delta,
                          const ScanOptions& opts) {
    if (!is_k_trivial(kind) || kind == GeometryKind::Enriques) {
        throw UnsupportedGeometryError("scan_k_trivial covers K3, abelian and bielliptic surfaces");
    }
    const unsigned workers = resolve_workers(opts.workers);
    ScanReport rep = make_report(std::string(to_string(kind)),
                                 {{"r", r.str()}, {"k", k.str()}, {"delta", delta.str()}, {"chi - (r+2)k", chi_margin.str()}},
                                 opts);
    rep.metadata.filters = {"r >= 1", "k >= 0"};
    rep.input_columns = {"r", "k", "delta", "chi"};
    rep.flag_columns = {"chi_ge_(r+2)k", "delta_ge_0"};
    const auto cells = product({r, k, delta, chi_margin}, [](const Cell& c) { return c[0] >= 1 && c[1] >= 0; });
    rep.rows = run_cells(cells, workers, [kind](const Cell& c) {
        const std::int64_t chi = (c[0] + 2) * c[1] + c[3];
        const SurfaceBundle b = bundle_from_chi_delta(kind, c[0], chi, q(c[2]));
        const CriterionVerdict v = kind == GeometryKind::K3 ? check_k3(b, as_k(c[1])) : check_abelian(b, as_k(c[1]));
        return row_from({q(c[0]), q(c[1]), q(c[2]), q(chi)}, v);
    });
    add_criterion(rep, "theorem", {"chi_ge_(r+2)k", "delta_ge_0"});
    return rep;
}

ScanReport scan_blowup(IntRange h, IntRange ell, IntRange k, const ScanOptions& opts) {
    const unsigned workers = resolve_workers(opts.workers);
    ScanReport rep = make_report("blowup-k3", {{"h", h.str()}, {"ell", ell.str()}, {"k", k.str()}}, opts);
    rep.metadata.filters = {"h >= 1", "ell >= 0", "k >= 0"};
    rep.input_columns = {"h", "ell", "k"};
    rep.flag_columns = {"ell_ge_k-1", "2h_gt_(ell+2)^2-6", "2h_gt_(ell+1)^2+4k", "2h_gt_ell(ell+1)+6k-6",
                        "k_le_ell+1"};
    const auto cells =
        product({h, ell, k}, [](const Cell& c) { return c[0] >= 1 && c[1] >= 0 && c[2] >= 0; });
    rep.rows = run_cells(cells, workers, [](const Cell& c) {
        const CriterionVerdict v = check_blowup(c[0], c[1], as_k(c[2]));
        return row_from({q(c[0]), q(c[1]), q(c[2])}, v, {c[2] <= c[1] + 1});
    });
    add_criterion(rep, "theorem", {"ell_ge_k-1", "2h_gt_(ell+2)^2-6", "2h_gt_(ell+1)^2+4k", "2h_gt_ell(ell+1)+6k-6"});
    add_criterion(rep, "proof bound", {"k_le_ell+1", "2h_gt_ell(ell+1)+6k-6"});
    return rep;
}

ScanReport scan_general_type(IntRange L_sq, IntRange L_dot_K, IntRange K_sq, IntRange chi_O, IntRange k,
                             const ScanOptions& opts) {
    const unsigned workers = resolve_workers(opts.workers);
    ScanReport rep = make_report("general",
                                 {{"K^2", K_sq.str()},
                                  {"chi(O)", chi_O.str()},
                                  {"L.K", L_dot_K.str()},
                                  {"L^2", L_sq.str()},
                                  {"k", k.str()}},
                                 opts);
    rep.metadata.filters = {"k >= 0", "L^2 = L.K mod 2"};
    rep.input_columns = {"K^2", "chi(O)", "L.K", "L^2", "k"};
    rep.flag_columns = {"chi(L)_ge_3k", "LK_ge_2K^2+k+1", "p_ge_0"};
    rep.extra_columns = {"m", "n", "p"};
    const auto cells = product({K_sq, chi_O, L_dot_K, L_sq, k}, [](const Cell& c) {
        return c[4] >= 0 && ((c[3] - c[2]) % 2) == 0;
    });
    rep.rows = run_cells(cells, workers, [](const Cell& c) {
        const int kk = as_k(c[4]);
        const CriterionVerdict v = check_general_type(c[3], c[2], c[0], c[1], kk);
        ScanRow row = row_from({q(c[0]), q(c[1]), q(c[2]), q(c[3]), q(c[4])}, v);
        const MnpTriple t = mnp_from_bundle(c[3], c[2], c[0], c[1], kk);
        row.extras = {std::to_string(t.m), std::to_string(t.n), std::to_string(t.p)};
        return row;
    });
    add_criterion(rep, "theorem", {"chi(L)_ge_3k", "LK_ge_2K^2+k+1", "p_ge_0"});
    return rep;
}

ScanReport scan_curve(IntRange g, IntRange r, IntRange d, IntRange k, const ScanOptions& opts) {
    const unsigned workers = resolve_workers(opts.workers);
    ScanReport rep =
        make_report("curve", {{"g", g.str()}, {"r", r.str()}, {"d", d.str()}, {"k", k.str()}}, opts);
    rep.metadata.filters = {"g >= 0", "r >= 1", "k >= 0"};
    rep.input_columns = {"g", "r", "d", "k"};
    rep.value_column = "signed_segre";
    rep.flag_columns = {"chi_ge_(r+1)k"};
    const auto cells =
        product({g, r, d, k}, [](const Cell& c) { return c[0] >= 0 && c[1] >= 1 && c[3] >= 0; });
    rep.rows = run_cells(cells, workers, [](const Cell& c) {
        const CriterionVerdict v = check_curve_criterion(CurveBundle{c[0], c[1], c[2]}, as_k(c[3]));
        return row_from({q(c[0]), q(c[1]), q(c[2]), q(c[3])}, v);
    });
    add_criterion(rep, "theorem", {"chi_ge_(r+1)k"});
    return rep;
}

ScanReport scan_quot(IntRange g, IntRange N, IntRange d_L, IntRange k, const ScanOptions& opts) {
    const unsigned workers = resolve_workers(opts.workers);
    ScanReport rep =
        make_report("quot", {{"g", g.str()}, {"N", N.str()}, {"d_L", d_L.str()}, {"k", k.str()}}, opts);
    rep.metadata.filters = {"g >= 0", "N >= 1", "k >= 0"};
    rep.input_columns = {"g", "N", "d_L", "k"};
    rep.value_column = "signed_segre";
    rep.flag_columns = {"chi_ge_k+g", "chi_ge_k(1+1/N)"};
    const auto cells =
        product({g, N, d_L, k}, [](const Cell& c) { return c[0] >= 0 && c[1] >= 1 && c[3] >= 0; });
    rep.rows = run_cells(cells, workers, [](const Cell& c) {
        const CriterionVerdict v = check_quot_criterion(c[0], c[1], c[2], as_k(c[3]));
        return row_from({q(c[0]), q(c[1]), q(c[2]), q(c[3])}, v);
    });
    add_criterion(rep, "theorem", {"chi_ge_k+g", "chi_ge_k(1+1/N)"});
    return rep;
}

ScanReport scan_lemma(IntRange m, IntRange n, IntRange p, const ScanOptions& opts) {
    const unsigned workers = resolve_workers(opts.workers);
    ScanReport rep = make_report("lemma", {{"m", m.str()}, {"n", n.str()}, {"p", p.str()}}, opts);
    rep.metadata.filters = {"m + n + p even"};
    rep.input_columns = {"m", "n", "p"};
    rep.value_column = "min_coefficient_through_bound";
    rep.flag_columns = {"hypotheses"};
    rep.extra_columns = {"bound", "first_nonpositive"};
    const auto cells = product({m, n, p}, [](const Cell& c) { return ((c[0] + c[1] + c[2]) % 2) == 0; });
    rep.rows = run_cells(cells, workers, [](const Cell& c) {
        // m + n + p is even here, so the lemma bound has no rounding
        const std::int64_t bound = std::min((c[0] + c[1] + c[2]) / 2 - 1, c[0] - 1);
        const int order = static_cast<int>(std::max<std::int64_t>(bound + 1, 1));
        const LemmaReport lr = verify_positivity_lemma(c[0], c[1], c[2], order);
        BigRational least = lr.coefficients.front();
        for (std::int64_t i = 1; i <= bound; ++i) {
            least = std::min(least, lr.coefficients[static_cast<std::size_t>(i)]);
        }
        ScanRow row;
        row.inputs = {q(c[0]), q(c[1]), q(c[2])};
        row.value = SegreValue(bound >= 0 ? least : BigRational(1));
        row.flags = {lr.hypotheses};
        row.extras = {std::to_string(bound),
                      lr.first_nonpositive ? std::to_string(*lr.first_nonpositive) : std::string("none")};
        return row;
    });
    add_criterion(rep, "lemma bound", {"hypotheses"});
    return rep;
}

}  // namespace segrelab
