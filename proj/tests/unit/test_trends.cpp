#include <doctest.h>

#include "support/oracles.hpp"

#include "algoeff/comparisons.hpp"
#include "algoeff/curves.hpp"
#include "algoeff/dataset.hpp"
#include "algoeff/error.hpp"
#include "algoeff/trends.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <vector>

using namespace algoeff;
using namespace algoeff::trends;
using namespace oracle;

namespace {

const std::string kTask = "ImageNet";
const std::string kThreshold = "top5 79.1%";

EfficiencyRecord total_only(std::string name, Date date, double total) {
    EfficiencyRecord r;
    r.name = std::move(name);
    r.date = date;
    r.task = kTask;
    r.threshold = kThreshold;
    r.total_training_flops = total;
    return r;
}

std::vector<std::string> names_of(const Frontier& f) {
    std::vector<std::string> out;
    for (const auto& r : f.records) out.push_back(r.name);
    return out;
}

} // namespace

TEST_SUITE("dates and durations") {
    TEST_CASE("strict ISO dates") {
        const auto d = Date::parse("2012-09-30");
        CHECK(d.iso() == "2012-09-30");
        CHECK(d.year() == 2012);
        CHECK(d.decimal_year() == doctest::Approx(2012.75).epsilon(0.001));
        CHECK_THROWS_AS(Date::parse("2012-9-30"), ParseError);
        CHECK_THROWS_AS(Date::parse("2019-02-30"), ParseError);
        CHECK_THROWS_AS(Date::parse("30/09/2012"), ParseError);
        CHECK_THROWS_AS(Date::parse("2012-09-30T00"), ParseError);
    }

    TEST_CASE("months between dates use the average month") {
        CHECK(months_between(Date(2000, 1, 1), Date(2001, 1, 1)) == doctest::Approx(366 / kDaysPerMonth));
        CHECK(months_between(Date(2001, 1, 1), Date(2000, 1, 1)) < 0);
        CHECK(months_between(Date(2012, 9, 30), Date(2012, 9, 30)) == 0.0);
    }

    TEST_CASE("duration parsing and conversion") {
        CHECK(Duration::parse("36mo").in_months() == 36.0);
        CHECK(Duration::parse("36").in_months() == 36.0);
        CHECK(Duration::parse("6y").in_months() == 72.0);
        CHECK(Duration::parse("2 years").unit == TimeUnit::years);
        CHECK(Duration::parse("60d").in_days() == 60.0);
        CHECK(Duration::parse("60d").in_months() == doctest::Approx(60.0 / kDaysPerMonth));
        CHECK(Duration::months(1).in_days() == doctest::Approx(kDaysPerMonth));
        CHECK(Duration::months(12).as(TimeUnit::years).value == doctest::Approx(1.0));
        CHECK(Duration::months(6.07).str() == "6.1 months");
        CHECK_THROWS_AS(Duration::parse("soon"), ParseError);
        CHECK_THROWS_AS(Duration::parse("5 fortnights"), ParseError);
    }
}

TEST_SUITE("efficiency factors") {
    const auto records = data::imagenet_records();
    const auto& alex = find_record(records, "AlexNet");

    TEST_CASE("shipped records derive totals from their epoch fields") {
        REQUIRE(records.size() == 16);
        for (const auto& r : records) {
            CAPTURE(r.name);
            REQUIRE(r.has_epoch_fields());
            CHECK(r.total_training_flops ==
                  doctest::Approx(curves::compute_to_threshold(*r.epochs, *r.gigaflops_per_image * 1e9,
                                                               *r.images_per_epoch, r.backward_multiplier))
                      .epsilon(1e-12));
            validate_record(r);
        }
    }

    TEST_CASE("headline factors") {
        const auto& eff = find_record(records, "EfficientNet-b0");
        const auto f = efficiency_factor(alex, eff);
        CHECK(f.factor == doctest::Approx(266.112 / 5.9904).epsilon(1e-9));
        CHECK(display_round(f.factor) == "44");
        CHECK(266.1 / 6.0 == doctest::Approx(44.35).epsilon(1e-3));
        CHECK(f.elapsed.in_months() == doctest::Approx(months_between(alex.date, eff.date)));

        const auto shuffle = efficiency_factor(alex, find_record(records, "ShuffleNet_v2_1x"));
        CHECK(display_round(shuffle.factor) == "25");
        CHECK(266.1 / 10.8 == doctest::Approx(24.64).epsilon(1e-3));
        CHECK(efficiency_factor(alex, alex).factor == 1.0);
    }

    TEST_CASE("reciprocity over every pair") {
        for (const auto& a : records)
            for (const auto& b : records) {
                const double ab = efficiency_factor(a, b).factor;
                const double ba = efficiency_factor(b, a).factor;
                CHECK(ab * ba == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(efficiency_factor(a, b).elapsed.value == doctest::Approx(-efficiency_factor(b, a).elapsed.value));
            }
    }

    TEST_CASE("mismatched task or threshold is an error") {
        auto other = alex;
        other.task = "CIFAR-10";
        CHECK_THROWS_AS(efficiency_factor(alex, other), ValidationError);
        other = alex;
        other.threshold = "top1";
        CHECK_THROWS_AS(efficiency_factor(alex, other), ValidationError);
    }

    TEST_CASE("decomposition") {
        const auto g = decompose(alex, find_record(records, "GoogLeNet"));
        CHECK(g.epochs_factor == doctest::Approx(11.25));
        CHECK(g.flops_per_epoch_factor == doctest::Approx(0.385));
        CHECK(display_round(g.product()) == "4.3");

        const auto m = decompose(alex, find_record(records, "MobileNet_v1"));
        CHECK(m.epochs_factor == doctest::Approx(90.0 / 11));
        CHECK(round_decimals(m.flops_per_epoch_factor, 2) == "1.35");
        CHECK(display_round(m.product()) == "11");

        const auto self = decompose(alex, alex);
        CHECK(self.epochs_factor == 1.0);
        CHECK(self.flops_per_epoch_factor == 1.0);

        for (const auto& a : records)
            for (const auto& b : records) {
                CHECK(decompose(a, b).product() == doctest::Approx(efficiency_factor(a, b).factor).epsilon(1e-9));
            }
    }

    TEST_CASE("decomposition preconditions") {
        const auto bare = total_only("bare", alex.date, 1e17);
        CHECK_THROWS_AS(decompose(alex, bare), ValidationError);
        const auto small = make_record("small", alex.date, kTask, alex.threshold, 10, 1.0, 5e5);
        CHECK_THROWS_AS(decompose(alex, small), ValidationError);
        const auto fwd = make_record("fwd", alex.date, kTask, alex.threshold, 10, 1.0, 1.28e6, 1.0);
        CHECK_THROWS_AS(decompose(alex, fwd), ValidationError);
    }

    TEST_CASE("unit invariance") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> k(1e-3, 1e3);
        for (int trial = 0; trial < 20; ++trial) {
            const double scale = k(rng);
            std::vector<EfficiencyRecord> scaled;
            for (const auto& r : records) {
                scaled.push_back(make_record(r.name, r.date, r.task, r.threshold, *r.epochs,
                                             *r.gigaflops_per_image * scale, *r.images_per_epoch,
                                             r.backward_multiplier));
            }
            for (std::size_t i = 0; i < records.size(); ++i)
                for (std::size_t j = 0; j < records.size(); ++j) {
                    CHECK(efficiency_factor(scaled[i], scaled[j]).factor ==
                          doctest::Approx(efficiency_factor(records[i], records[j]).factor).epsilon(1e-12));
                    const auto d0 = decompose(records[i], records[j]);
                    const auto d1 = decompose(scaled[i], scaled[j]);
                    CHECK(d1.epochs_factor == doctest::Approx(d0.epochs_factor).epsilon(1e-12));
                    CHECK(d1.flops_per_epoch_factor == doctest::Approx(d0.flops_per_epoch_factor).epsilon(1e-12));
                }
            CHECK(names_of(frontier(scaled)) == names_of(frontier(records)));
            for (auto method : {FitMethod::endpoints, FitMethod::regression}) {
                CHECK(fit_trend(frontier(scaled), method).doubling_months ==
                      doctest::Approx(fit_trend(frontier(records), method).doubling_months).epsilon(1e-9));
            }
        }
    }
}

TEST_SUITE("partial runs and doubling") {
    TEST_CASE("partial-run factors") {
        CHECK(partial_run_factor(4.0e19, 3.3e18, 0.20) == doctest::Approx(60.606).epsilon(1e-4));
        CHECK(round_decimals(partial_run_factor(4.0e19, 3.3e18, 0.20), 0) == "61");
        CHECK(partial_run_factor(1.4e20, 2.3e19, 0.68) == doctest::Approx(8.951).epsilon(1e-3));
        CHECK(partial_run_factor(4.4, 1, 390000.0 / 700000.0) == doctest::Approx(7.897).epsilon(1e-3));
        CHECK(round_decimals(partial_run_factor(4.4, 1, 390000.0 / 700000.0), 0) == "8");
        CHECK_THROWS_AS(partial_run_factor(1, 1, 0), ValidationError);
        CHECK_THROWS_AS(partial_run_factor(1, 1, 1.5), ValidationError);
        CHECK_THROWS_AS(partial_run_factor(-1, 1, 0.5), ValidationError);
    }

    TEST_CASE("doubling times") {
        CHECK(doubling_time(61, Duration::months(36)).value == doctest::Approx(36 / std::log2(61.0)));
        CHECK(round_decimals(doubling_time(61, Duration::months(36)).value, 0) == "6");
        const auto dota = doubling_time(5, Duration::days(60));
        CHECK(dota.unit == TimeUnit::days);
        CHECK(dota.value == doctest::Approx(25.84).epsilon(1e-3));
        for (double p : {0.5, 7.0, 36.0, 1000.0}) CHECK(doubling_time(2, Duration::months(p)).value == doctest::Approx(p));
        CHECK_THROWS_AS(doubling_time(1.0, Duration::months(12)), ValidationError);
        CHECK_THROWS_AS(doubling_time(0.5, Duration::months(12)), ValidationError);
        CHECK_THROWS_AS(doubling_time(4, Duration::months(0)), ValidationError);
    }

    TEST_CASE("doubling time decreases in factor and is linear in elapsed") {
        std::mt19937 rng(9);
        std::uniform_real_distribution<double> f(1.001, 1000.0);
        std::uniform_real_distribution<double> e(0.1, 200.0);
        for (int trial = 0; trial < 500; ++trial) {
            double a = f(rng), b = f(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            const double months = e(rng);
            REQUIRE(doubling_time(b, Duration::months(months)).value < doubling_time(a, Duration::months(months)).value);
            const double k = e(rng);
            REQUIRE(doubling_time(a, Duration::months(k * months)).value ==
                    doctest::Approx(k * doubling_time(a, Duration::months(months)).value).epsilon(1e-12));
        }
    }

    TEST_CASE("cross-domain comparisons") {
        const auto records = data::imagenet_records();
        for (const auto& c : data::cross_domain_comparisons()) {
            const auto r = evaluate(c, records);
            CAPTURE(c.id);
            REQUIRE(r.factor > 1.0);
            CHECK(r.doubling.value > 0.0);
            if (c.id == "seq2seq_transformer") {
                CHECK(round_decimals(r.factor, 0) == "61");
                CHECK(round_decimals(r.doubling.value, 0) == "6");
                CHECK(r.warnings.empty());
            }
            if (c.id == "openaifive_rerun") {
                CHECK(r.doubling.unit == TimeUnit::days);
                CHECK_FALSE(r.warnings.empty());
            }
            if (c.id == "resnet_efficientnet") CHECK_FALSE(r.warnings.empty());
        }
    }
}

TEST_SUITE("frontier and trend") {
    TEST_CASE("shipped frontier") {
        const auto f = frontier(data::imagenet_records());
        CHECK(names_of(f) == std::vector<std::string>{"AlexNet", "GoogLeNet", "MobileNet_v1", "ShuffleNet_v1_1x",
                                                      "ShuffleNet_v2_1x", "EfficientNet-b0"});
        CHECK(names_of(frontier({total_only("solo", Date(2015, 1, 1), 5)})) == std::vector<std::string>{"solo"});
    }

    TEST_CASE("random sets match the quadratic scan") {
        std::mt19937 rng(1234);
        std::uniform_int_distribution<int> day(0, 400);
        std::uniform_int_distribution<int> cost(1, 30);
        std::uniform_int_distribution<int> size(1, 50);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<EfficiencyRecord> rs;
            const int n = size(rng);
            for (int i = 0; i < n; ++i) {
                rs.push_back(total_only("r" + std::to_string(i), add_days(Date(2012, 1, 1), day(rng)), cost(rng)));
            }
            const auto f = frontier(rs);
            REQUIRE(names_of(f) == frontier_oracle(rs));
            for (std::size_t i = 1; i < f.records.size(); ++i) {
                REQUIRE(f.records[i - 1].date < f.records[i].date);
                REQUIRE(f.records[i - 1].total_training_flops > f.records[i].total_training_flops);
            }
            for (const auto& r : rs) {
                bool covered = false;
                for (const auto& k : f.records)
                    if (k.date <= r.date && k.total_training_flops <= r.total_training_flops) covered = true;
                REQUIRE(covered);
            }
        }
    }

    TEST_CASE("mixed tasks are rejected") {
        auto a = total_only("a", Date(2015, 1, 1), 5);
        auto b = total_only("b", Date(2016, 1, 1), 4);
        b.task = "WMT";
        CHECK_THROWS_AS(frontier({a, b}), ValidationError);
    }

    TEST_CASE("exact exponential recovers its doubling time") {
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> day(0, 3000);
        for (double doubling : {13.0, 4.5, 30.0}) {
            std::vector<EfficiencyRecord> rs;
            const Date start(2012, 1, 1);
            std::vector<int> days{0};
            for (int i = 0; i < 19; ++i) days.push_back(day(rng));
            std::sort(days.begin(), days.end());
            days.erase(std::unique(days.begin(), days.end()), days.end());
            for (std::size_t i = 0; i < days.size(); ++i) {
                const Date d = add_days(start, days[i]);
                rs.push_back(total_only("p" + std::to_string(i), d,
                                        1e18 * std::exp2(-months_between(start, d) / doubling)));
            }
            const auto f = frontier(rs);
            REQUIRE(f.records.size() == rs.size());
            const auto reg = fit_trend(f, FitMethod::regression);
            const auto end = fit_trend(f, FitMethod::endpoints);
            CHECK(reg.doubling_months == doctest::Approx(doubling).epsilon(1e-9));
            CHECK(reg.r_squared == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(end.doubling_months == doctest::Approx(reg.doubling_months).epsilon(1e-9));
            CHECK(end.r_squared == 1.0);
            CHECK(std::log(2.0) / std::log(1.0 / reg.growth_rate) ==
                  doctest::Approx(reg.doubling_months).epsilon(1e-12));
        }
    }

    TEST_CASE("shipped trend") {
        const auto f = frontier(data::imagenet_records());
        const auto end = fit_trend(f, FitMethod::endpoints);
        CHECK(end.doubling_months > 14.0);
        CHECK(end.doubling_months < 18.0);
        const auto reg = fit_trend(f, FitMethod::regression);
        CHECK(reg.r_squared > 0.9);
        CHECK(reg.r_squared <= 1.0);
        CHECK(reg.doubling_time().unit == TimeUnit::months);
    }

    TEST_CASE("trend preconditions") {
        Frontier one{{total_only("a", Date(2015, 1, 1), 5)}};
        CHECK_THROWS_AS(fit_trend(one, FitMethod::regression), ValidationError);
        Frontier same_day{{total_only("a", Date(2015, 1, 1), 5), total_only("b", Date(2015, 1, 1), 4)}};
        CHECK_THROWS_AS(fit_trend(same_day, FitMethod::endpoints), ValidationError);
        CHECK_THROWS_AS(fit_trend(same_day, FitMethod::regression), ValidationError);
        Frontier short_span{{total_only("a", Date(2015, 1, 1), 8), total_only("b", Date(2015, 4, 1), 1)}};
        CHECK(fit_trend(short_span, FitMethod::endpoints).doubling_time().unit == TimeUnit::days);
    }
}

TEST_SUITE("effective compute") {
    TEST_CASE("moore factors") {
        CHECK(moore_factor(Duration::months(84), Duration::months(24)) == doctest::Approx(11.3137).epsilon(1e-4));
        CHECK(display_round(moore_factor(Duration::years(7), Duration::months(24))) == "11");
        CHECK(moore_factor(Duration::months(0), Duration::months(17)) == 1.0);
        CHECK(moore_factor(Duration::months(48), Duration::months(24)) == doctest::Approx(4.0).epsilon(1e-15));
        CHECK_THROWS_AS(moore_factor(Duration::months(12), Duration::months(0)), ValidationError);
    }

    TEST_CASE("products") {
        const std::vector<double> two{300000, 25};
        CHECK(effective_compute(two) == doctest::Approx(7.5e6));
        CHECK(effective_compute(std::vector<double>{}) == 1.0);
        const double hw = 11.3;
        const std::vector<double> three{hw, 300000 / hw, 25};
        CHECK(effective_compute(three) == doctest::Approx(7.5e6));
        CHECK_THROWS_AS(effective_compute(std::vector<double>{2, 0}), ValidationError);

        std::mt19937 rng(8);
        std::uniform_real_distribution<double> f(0.01, 100.0);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> fs;
            for (int i = 0; i < 6; ++i) fs.push_back(f(rng));
            const double base = effective_compute(fs);
            std::shuffle(fs.begin(), fs.end(), rng);
            REQUIRE(effective_compute(fs) == doctest::Approx(base).epsilon(1e-12));
        }
    }

    TEST_CASE("model series") {
        EffectiveComputeModel m;
        m.spend_parallelization_factor = 37500;
        m.algorithmic_factor = 25;
        CHECK(m.hardware_factor() == doctest::Approx(8.0));
        CHECK(m.total() == doctest::Approx(7.5e6));
        CHECK(m.hardware_at(0) == doctest::Approx(1.0));
        CHECK(m.hardware_at(72) == doctest::Approx(8.0));
        CHECK(m.spend_at(72) == doctest::Approx(37500));
        CHECK(m.algorithmic_at(36) == doctest::Approx(5.0));
        CHECK(m.hardware_at(36) * m.spend_at(36) * m.algorithmic_at(36) ==
              doctest::Approx(std::sqrt(m.total())));
    }
}

TEST_SUITE("units and rounding") {
    TEST_CASE("reporting units") {
        CHECK(to_paper_units(8.64e16, PaperUnit::stated) == doctest::Approx(1.0));
        CHECK(to_paper_units(0, PaperUnit::stated) == 0.0);
        CHECK(to_paper_units(0, PaperUnit::table) == 0.0);
        CHECK(to_paper_units(6.144e16, PaperUnit::table) == doctest::Approx(61.44));
        CHECK(to_paper_units(5.0, PaperUnit::raw) == 5.0);
        CHECK(parse_paper_unit("stated") == PaperUnit::stated);
        CHECK(parse_paper_unit("table") == PaperUnit::table);
        CHECK_FALSE(parse_paper_unit("furlongs").has_value());
    }

    TEST_CASE("display rounding is half-even on the decimal value") {
        CHECK(display_round(0.385) == "0.38");
        CHECK(display_round(4.333) == "4.3");
        CHECK(display_round(44.35) == "44");
        CHECK(display_round(11.25) == "11");
        CHECK(display_round(8.1818) == "8.2");
        CHECK(display_round(1.0) == "1.0");
        CHECK(display_round(25.5) == "26");
        CHECK(display_round(24.5) == "24");
        CHECK(display_round(7.5e6) == "7500000");
        CHECK(display_round(-4.333) == "-4.3");
        CHECK(round_decimals(1.351, 2) == "1.35");
        CHECK(round_decimals(22.5, 0) == "22");
        CHECK(round_decimals(3.75, 1) == "3.8");
        CHECK(round_decimals(0.125, 2) == "0.12");
        CHECK(round_decimals(61.44, 1) == "61.4");
    }
}

TEST_SUITE("records files") {
    TEST_CASE("round trip") {
        const auto records = data::imagenet_records();
        const auto again = parse_records(records_to_json(records));
        CHECK(again == records);
        CHECK(records_to_json(again) == records_to_json(records));
    }

    TEST_CASE("total-only records") {
        const auto rs = parse_records(
            R"([{"name":"x","date":"2016-01-01","task":"t","threshold":"q","total_training_flops":1e18}])");
        REQUIRE(rs.size() == 1);
        CHECK_FALSE(rs[0].has_epoch_fields());
        CHECK(rs[0].total_training_flops == 1e18);
    }

    TEST_CASE("inconsistent or malformed records are rejected") {
        const auto bad = [](const std::string& body) {
            CHECK_THROWS_AS(parse_records("[{" + body + "}]"), Error);
        };
        bad(R"("name":"x","date":"2016-01-01","task":"t","threshold":"q","epochs":3,"gigaflops_per_image":1)");
        bad(R"("name":"x","date":"2016-01-01","task":"t","threshold":"q","epochs":3,"gigaflops_per_image":1,
               "images_per_epoch":1e6,"total_training_flops":5)");
        bad(R"("name":"x","date":"2016-13-01","task":"t","threshold":"q","total_training_flops":5)");
        bad(R"("name":"x","date":"2016-01-01","task":"t","threshold":"q","total_training_flops":5,"colour":"red")");
        bad(R"("name":"x","date":"2016-01-01","task":"t","threshold":"q")");
        bad(R"("name":"x","date":"2016-01-01","task":"t","threshold":"q","total_training_flops":-5)");
        CHECK_THROWS_AS(parse_records("{}"), Error);
        CHECK_THROWS_AS(parse_records("[1,"), ParseError);
        CHECK_THROWS_AS(load_records_file("/nonexistent/records.json"), NotFoundError);

        const auto ok = parse_records(R"([{"name":"x","date":"2016-01-01","task":"t","threshold":"q","epochs":3,
            "gigaflops_per_image":1,"images_per_epoch":1e6,"total_training_flops":9e15}])");
        CHECK(ok[0].total_training_flops == doctest::Approx(9e15));
    }

    TEST_CASE("lookup by name") {
        const auto records = data::imagenet_records();
        CHECK(find_record(records, "efficientnet b0").name == "EfficientNet-b0");
        try {
            find_record(records, "LeNet");
            FAIL("expected NotFoundError");
        } catch (const NotFoundError& e) {
            CHECK(std::string(e.what()).find("AlexNet") != std::string::npos);
        }
    }
}
