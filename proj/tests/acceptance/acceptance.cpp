#include "support/oracles.hpp"

#include "algoeff/builtin_archs.hpp"
#include "algoeff/comparisons.hpp"
#include "algoeff/curves.hpp"
#include "algoeff/dataset.hpp"
#include "algoeff/flops.hpp"
#include "algoeff/graph_builder.hpp"
#include "algoeff/shapes.hpp"
#include "algoeff/trends.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace algoeff;
using namespace oracle;
using trends::EfficiencyRecord;

namespace {

// Pinned tolerances.
constexpr double kFlopCountTolerance = 0.10;
constexpr double kFlopCountSeconds = 1.0;
constexpr double kComputeTolerance = 0.02;
constexpr double kComputeTightTolerance = 0.005;
constexpr double kProductTolerance = 1e-9;
constexpr double kDoublingTolerance = 0.5;
constexpr double kMooreExpected = 11.31;
constexpr double kMooreTolerance = 0.005;
constexpr double kTrendRecoveryTolerance = 1e-9;
constexpr double kTrendLow = 14.0;
constexpr double kTrendHigh = 18.0;
constexpr double kReciprocityTolerance = 1e-12;
constexpr double kInvarianceTolerance = 1e-12;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

std::string fmt(double v, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

double relative(double got, double want) { return (got - want) / want; }

const std::vector<EfficiencyRecord>& records() {
    static const auto r = data::imagenet_records();
    return r;
}

const EfficiencyRecord& record(const std::string& name) { return trends::find_record(records(), name); }

Verdict flop_counts() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, double>> counted;
    for (const auto& name : arch::mandatory_arch_names()) {
        const auto spec = arch::builtin_arch(name);
        counted.emplace_back(name, arch::count_flops(spec, {3, 224, 224}).giga());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& [name, giga] : counted) {
        const auto& r = record(name);
        const double reference = r.published.gigaflops_thop ? *r.published.gigaflops_thop : *r.published.gigaflops_paper;
        const double dev = relative(giga, reference);
        v.require(std::abs(dev) <= kFlopCountTolerance,
                  name + " counts " + fmt(giga, 3) + " G vs " + fmt(reference, 2) + " G (" + fmt(100 * dev, 1) + "%)");
    }
    v.require(seconds < kFlopCountSeconds, "counting took " + fmt(seconds, 3) + " s");
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    std::mt19937 rng(20200505);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng);
        std::vector<OracleShape> shapes;
        const auto expected = oracle_macs(g.layers, {g.input.channels, g.input.height, g.input.width}, &shapes);
        const auto got = arch::count_flops(g.arch, g.input).total_per_image;
        v.require(got == expected, "graph " + std::to_string(trial) + ": " + std::to_string(got) + " vs oracle " +
                                       std::to_string(expected));
        const auto inferred = arch::infer_shapes(g.arch, g.input);
        for (std::size_t i = 0; i < g.ids.size(); ++i) {
            const auto& s = inferred.at(g.ids[i]);
            v.require(s.channels == shapes[i].c && s.height == shapes[i].h && s.width == shapes[i].w,
                      "graph " + std::to_string(trial) + " node " + g.ids[i] + " shape " + s.str());
        }
    }

    // Single conv and pool layers over the whole parameter grid, through infer_shapes.
    for (std::int64_t in = 1; in <= 32; ++in)
        for (std::int64_t k = 1; k <= 4; ++k)
            for (std::int64_t s = 1; s <= 4; ++s)
                for (std::int64_t p = 0; p <= 4; ++p)
                    for (std::int64_t d = 1; d <= 4; ++d) {
                        const auto windows = enumerate_windows(in, k, s, p, d);
                        if (windows < 1) continue;
                        arch::ArchitectureSpec spec;
                        spec.name = "grid";
                        spec.default_input = {2, in, in};
                        arch::Conv2dParams cp;
                        cp.out_channels = 2;
                        cp.kernel_h = cp.kernel_w = k;
                        cp.stride = s;
                        cp.padding = p;
                        cp.dilation = d;
                        spec.nodes.push_back({"conv", arch::LayerKind::conv2d, cp, {"input"}});
                        arch::PoolParams pp;
                        pp.kernel = k;
                        pp.stride = s;
                        pp.padding = p;
                        pp.dilation = d;
                        spec.nodes.push_back({"pool", arch::LayerKind::maxpool, pp, {"input"}});
                        const bool ceil_ok = p <= k / 2;
                        if (ceil_ok) {
                            pp.ceil_mode = true;
                            spec.nodes.push_back({"ceil", arch::LayerKind::maxpool, pp, {"input"}});
                        }
                        spec.output = "conv";
                        const auto shapes = arch::infer_shapes(spec, spec.default_input);
                        const std::string where = " in=" + std::to_string(in) + " k=" + std::to_string(k) +
                                                  " s=" + std::to_string(s) + " p=" + std::to_string(p) +
                                                  " d=" + std::to_string(d);
                        v.require(shapes.at("conv").height == windows && shapes.at("conv").width == windows,
                                  "conv" + where);
                        v.require(shapes.at("pool").height == windows, "pool" + where);
                        if (ceil_ok) {
                            v.require(shapes.at("ceil").height == enumerate_windows(in, k, s, p, d, s - 1),
                                      "ceil pool" + where);
                        }
                    }
    return v;
}

Verdict compute_reconstruction() {
    Verdict v;
    int rows = 0;
    for (const auto& r : records()) {
        ++rows;
        const double recomputed = curves::compute_to_threshold(*r.epochs, *r.gigaflops_per_image * 1e9,
                                                               *r.images_per_epoch, 3.0);
        const double table = trends::to_paper_units(recomputed, trends::PaperUnit::table);
        const double printed = *r.published.teraflop_s_days;
        const double dev = relative(table, printed);
        const bool tight = r.name == "GoogLeNet" || r.name == "EfficientNet-b0";
        const double tol = tight ? kComputeTightTolerance : kComputeTolerance;
        v.require(std::abs(dev) <= tol,
                  r.name + " " + fmt(table, 2) + " vs " + fmt(printed, 1) + " (" + fmt(100 * dev, 2) + "%)");
    }
    v.require(rows == 16, "expected 16 rows, found " + std::to_string(rows));
    return v;
}

Verdict headline_factors() {
    Verdict v;
    const auto& alex = record("AlexNet");
    struct Case {
        const char* improved;
        const char* printed;
        double column_ratio;  // ratio of the printed teraflop/s-day column
        int column_decimals;
    };
    const Case cases[] = {
        {"EfficientNet-b0", "44", 44.35, 2},
        {"ShuffleNet_v2_1x", "25", 24.6, 1},
        {"GoogLeNet", "4.3", 4.33, 2},
    };
    for (const auto& c : cases) {
        const auto& imp = record(c.improved);
        const double factor = trends::efficiency_factor(alex, imp).factor;
        v.require(trends::display_round(factor) == c.printed,
                  std::string(c.improved) + " factor " + fmt(factor, 3) + " displays as " +
                      trends::display_round(factor) + ", printed " + c.printed);
        const double from_column = *alex.published.teraflop_s_days / *imp.published.teraflop_s_days;
        v.require(trends::round_decimals(from_column, c.column_decimals) ==
                      trends::round_decimals(c.column_ratio, c.column_decimals),
                  std::string(c.improved) + " printed-column ratio " + fmt(from_column, 3));
    }
    return v;
}

Verdict decomposition_rows() {
    Verdict v;
    struct Row {
        const char* name;
        const char* epochs;
        const char* per_epoch;
        const char* total;
    };
    const Row printed[] = {
        {"AlexNet", "1.0", "1.0", "1.0"},
        {"GoogLeNet", "11", "0.38", "4.3"},
        {"MobileNet_v1", "8.2", "1.35", "11"},
        {"ShuffleNet_v1_1x", "3.8", "5.5", "21"},
        {"ShuffleNet_v2_1x", "4.5", "5.5", "25"},
        {"EfficientNet-b0", "22", "2.0", "44"},
    };
    const auto decimals = [](const std::string& text) {
        const auto dot = text.find('.');
        return dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    };
    const auto front = trends::frontier(records());
    v.require(front.records.size() == 6, "frontier has " + std::to_string(front.records.size()) + " records");
    const auto& alex = record("AlexNet");
    for (std::size_t i = 0; i < std::size(printed); ++i) {
        const auto& row = printed[i];
        if (i < front.records.size()) v.require(front.records[i].name == row.name, "frontier row " + front.records[i].name);
        const auto d = trends::decompose(alex, record(row.name));
        const double overall = trends::efficiency_factor(alex, record(row.name)).factor;
        const std::string got[] = {trends::round_decimals(d.epochs_factor, decimals(row.epochs)),
                                   trends::round_decimals(d.flops_per_epoch_factor, decimals(row.per_epoch)),
                                   trends::round_decimals(d.product(), decimals(row.total))};
        const std::string want[] = {row.epochs, row.per_epoch, row.total};
        for (int k = 0; k < 3; ++k) {
            v.require(got[k] == want[k], std::string(row.name) + " column " + std::to_string(k + 1) + ": " + got[k] +
                                             " vs " + want[k]);
        }
        v.require(std::abs(relative(d.product(), overall)) <= kProductTolerance,
                  std::string(row.name) + " product differs from the overall factor");
    }
    return v;
}

Verdict partial_runs() {
    Verdict v;
    const double seq = trends::partial_run_factor(4.0e19, 3.3e18, 0.20);
    const double gnmt = trends::partial_run_factor(1.4e20, 2.3e19, 0.68);
    const double go = trends::partial_run_factor(4.4, 1.0, 390000.0 / 700000.0);
    v.require(trends::round_decimals(seq, 0) == "61", "Seq2Seq " + fmt(seq, 3));
    v.require(trends::round_decimals(gnmt, 0) == "9", "GNMT " + fmt(gnmt, 3));
    v.require(trends::round_decimals(go, 0) == "8", "AlphaZero " + fmt(go, 3));

    const auto comparisons = data::cross_domain_comparisons();
    for (const auto& c : comparisons) {
        if (c.id != "seq2seq_transformer" && c.id != "gnmt_transformer" && c.id != "alphagozero_alphazero") continue;
        const auto r = trends::evaluate(c, records());
        v.require(trends::round_decimals(r.factor, 0) == trends::round_decimals(c.printed->factor, 0),
                  c.id + " shipped inputs give " + fmt(r.factor, 3));
    }
    return v;
}

Verdict cross_domain_doubling() {
    Verdict v;
    const auto comparisons = data::cross_domain_comparisons();
    const char* matched[] = {"seq2seq_transformer", "gnmt_transformer", "alphagozero_alphazero", "openaifive_rerun"};
    for (const char* id : matched) {
        bool found = false;
        for (const auto& c : comparisons) {
            if (c.id != id) continue;
            found = true;
            const auto r = trends::evaluate(c, records());
            const auto printed = c.printed->doubling;
            const double got = r.doubling.as(printed.unit).value;
            v.require(std::abs(got - printed.value) <= kDoublingTolerance,
                      c.id + " doubling " + fmt(got, 2) + " " + std::string(to_string(printed.unit)) + " vs printed " +
                          fmt(printed.value, 0));
        }
        v.require(found, std::string(id) + " missing from the shipped comparisons");
    }
    bool flagged = false;
    for (const auto& c : comparisons) {
        if (c.id == "resnet_efficientnet") flagged = !trends::evaluate(c, records()).warnings.empty();
    }
    v.require(flagged, "resnet_efficientnet carries no consistency warning");
    return v;
}

Verdict effective_compute() {
    Verdict v;
    const std::vector<double> factors{300000, 25};
    const double total = trends::effective_compute(factors);
    v.require(total == 7.5e6, "effective compute " + fmt(total, 1));
    const double moore = trends::moore_factor(Duration::months(84), Duration::months(24));
    v.require(std::abs(moore - kMooreExpected) <= kMooreTolerance, "moore factor " + fmt(moore, 4));
    v.require(trends::display_round(moore) == "11", "moore factor displays as " + trends::display_round(moore));
    return v;
}

Verdict trend_recovery() {
    Verdict v;
    std::mt19937 rng(1600);
    std::uniform_int_distribution<int> day(1, 3000);
    std::uniform_real_distribution<double> doubling(3.0, 40.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double target = doubling(rng);
        const Date start(2012, 1, 1);
        std::vector<int> days{0};
        for (int i = 0; i < 19; ++i) days.push_back(day(rng));
        std::sort(days.begin(), days.end());
        days.erase(std::unique(days.begin(), days.end()), days.end());
        trends::Frontier f;
        for (std::size_t i = 0; i < days.size(); ++i) {
            EfficiencyRecord r;
            r.name = "p" + std::to_string(i);
            r.date = add_days(start, days[i]);
            r.task = "synthetic";
            r.threshold = "fixed";
            r.total_training_flops = 1e18 * std::exp2(-months_between(start, r.date) / target);
            f.records.push_back(r);
        }
        for (auto method : {trends::FitMethod::regression, trends::FitMethod::endpoints}) {
            const auto fit = trends::fit_trend(f, method);
            v.require(std::abs(relative(fit.doubling_months, target)) <= kTrendRecoveryTolerance,
                      std::string(to_string(method)) + " recovered " + fmt(fit.doubling_months, 12) + " for " +
                          fmt(target, 12));
        }
    }
    const auto shipped = trends::fit_trend(trends::frontier(records()), trends::FitMethod::endpoints);
    v.require(shipped.doubling_months >= kTrendLow && shipped.doubling_months <= kTrendHigh,
              "shipped endpoints doubling " + fmt(shipped.doubling_months, 2) + " months");
    v.notes.push_back("shipped endpoints doubling " + fmt(shipped.doubling_months, 2) + " months");
    return v;
}

std::vector<std::string> frontier_names(const trends::Frontier& f) {
    std::vector<std::string> out;
    for (const auto& r : f.records) out.push_back(r.name);
    return out;
}

Verdict property_suites() {
    Verdict v;
    const auto& rs = records();

    for (const auto& a : rs)
        for (const auto& b : rs) {
            const double ab = trends::efficiency_factor(a, b).factor;
            const double ba = trends::efficiency_factor(b, a).factor;
            v.require(std::abs(ab * ba - 1.0) <= kReciprocityTolerance, "reciprocity " + a.name + "/" + b.name);
        }

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> scale_dist(-6.0, 6.0);
    const auto base_front = frontier_names(trends::frontier(rs));
    const auto base_trend = trends::fit_trend(trends::frontier(rs), trends::FitMethod::regression).doubling_months;
    for (int trial = 0; trial < 10; ++trial) {
        const double scale = std::pow(10.0, scale_dist(rng));
        std::vector<EfficiencyRecord> scaled;
        for (const auto& r : rs) {
            scaled.push_back(trends::make_record(r.name, r.date, r.task, r.threshold, *r.epochs,
                                                 *r.gigaflops_per_image * scale, *r.images_per_epoch,
                                                 r.backward_multiplier));
        }
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < rs.size(); ++j) {
                const double f0 = trends::efficiency_factor(rs[i], rs[j]).factor;
                const double f1 = trends::efficiency_factor(scaled[i], scaled[j]).factor;
                v.require(std::abs(relative(f1, f0)) <= kInvarianceTolerance, "rescaled factor " + rs[i].name);
                const auto d0 = trends::decompose(rs[i], rs[j]);
                const auto d1 = trends::decompose(scaled[i], scaled[j]);
                v.require(std::abs(relative(d1.flops_per_epoch_factor, d0.flops_per_epoch_factor)) <=
                              kInvarianceTolerance,
                          "rescaled decomposition " + rs[i].name);
            }
        v.require(frontier_names(trends::frontier(scaled)) == base_front, "rescaled frontier membership");
        const double t = trends::fit_trend(trends::frontier(scaled), trends::FitMethod::regression).doubling_months;
        v.require(std::abs(relative(t, base_trend)) <= 1e-9, "rescaled doubling time " + fmt(t, 12));
    }

    std::uniform_int_distribution<int> day(0, 400);
    std::uniform_int_distribution<int> cost(1, 30);
    std::uniform_int_distribution<int> size(1, 50);
    int frontier_mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<EfficiencyRecord> set;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) {
            EfficiencyRecord r;
            r.name = "r" + std::to_string(i);
            r.date = add_days(Date(2012, 1, 1), day(rng));
            r.task = "synthetic";
            r.threshold = "fixed";
            r.total_training_flops = cost(rng);
            set.push_back(r);
        }
        if (frontier_names(trends::frontier(set)) != frontier_oracle(set)) ++frontier_mismatches;
    }
    v.require(frontier_mismatches == 0, std::to_string(frontier_mismatches) + " of 1000 frontiers differ from the scan");

    int dominance_mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_compute(rng);
        const auto b = random_compute(rng);
        const auto r = curves::dominance(a, b).relation;
        if (r != grid_oracle(a, b) || curves::dominance(b, a).relation != swapped(r)) ++dominance_mismatches;
    }
    v.require(dominance_mismatches == 0,
              std::to_string(dominance_mismatches) + " of 500 curve pairs differ from the grid");
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"per-image counts of the mandatory built-ins", flop_counts},
        {"counting and shapes equal the loop-nest and window oracles", oracle_equivalence},
        {"efficiency table compute reconstruction", compute_reconstruction},
        {"headline efficiency factors", headline_factors},
        {"epochs and FLOPs-per-epoch decomposition", decomposition_rows},
        {"partial-run factors", partial_runs},
        {"cross-domain doubling times", cross_domain_doubling},
        {"effective compute and hardware factor", effective_compute},
        {"trend recovery and shipped doubling time", trend_recovery},
        {"property suites", property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.notes.push_back(std::string("exception: ") + e.what());
        }
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << '\n';
        const std::size_t shown = std::min<std::size_t>(v.notes.size(), 8);
        for (std::size_t k = 0; k < shown; ++k) std::cout << "     " << v.notes[k] << '\n';
        if (v.notes.size() > shown) std::cout << "     (" << v.notes.size() - shown << " more)\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << " of " << criteria.size()
              << " criteria pass\n";
    return failures == 0 ? 0 : 1;
}
