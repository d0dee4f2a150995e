#include <doctest.h>

#include "support/oracles.hpp"

#include "algoeff/curves.hpp"
#include "algoeff/dataset.hpp"
#include "algoeff/error.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

using namespace algoeff;
using namespace algoeff::curves;
using namespace oracle;


namespace {

LearningCurve make_curve(std::vector<std::pair<std::int64_t, double>> pts) {
    LearningCurve c;
    c.model = "test";
    for (auto [e, a] : pts) c.points.push_back({e, a, std::nullopt});
    return c;
}

ComputeCurve make_compute(std::vector<std::pair<double, double>> pts, std::string model = "c") {
    ComputeCurve c;
    c.model = std::move(model);
    for (auto [f, a] : pts) c.points.push_back({f, a});
    return c;
}

} // namespace

TEST_SUITE("curve parsing") {
    TEST_CASE("two-point curve") {
        const auto c = parse_curve("epoch,top5_accuracy\n1,0.30\n2,0.55");
        REQUIRE(c.points.size() == 2);
        CHECK(c.points[0].epoch == 1);
        CHECK(c.points[1].accuracy == doctest::Approx(0.55));
        CHECK_FALSE(c.points[0].cumulative_flops.has_value());
    }

    TEST_CASE("accuracy out of range reports the line") {
        try {
            parse_curve("epoch,top5_accuracy\n1,0.30\n2,1.30\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }

    TEST_CASE("epochs must increase") {
        try {
            parse_curve("epoch,top5_accuracy\n3,0.30\n2,0.40\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).find("increase") != std::string::npos);
        }
    }

    TEST_CASE("comments, percent input and cumulative compute") {
        CsvOptions opts;
        opts.percent = true;
        opts.model = "m";
        const auto c = parse_curve("# note\nepoch,top5_accuracy,cumulative_flops\n\n1,30,1e15\n# mid\n2,79.1,2e15\n",
                                   opts);
        REQUIRE(c.points.size() == 2);
        CHECK(c.model == "m");
        CHECK(c.points[1].accuracy == doctest::Approx(0.791));
        CHECK(*c.points[1].cumulative_flops == 2e15);
    }

    TEST_CASE("malformed input") {
        CHECK_THROWS_AS(parse_curve("epoch,accuracy\n1,0.3\n"), ParseError);
        CHECK_THROWS_AS(parse_curve("epoch,top5_accuracy\n1,0.3,7\n"), ParseError);
        CHECK_THROWS_AS(parse_curve("epoch,top5_accuracy\nx,0.3\n"), ParseError);
        CHECK_THROWS_AS(parse_curve("epoch,top5_accuracy\n"), ParseError);
        CHECK_THROWS_AS(parse_curve("epoch,top5_accuracy,cumulative_flops\n1,0.3,5\n2,0.4,4\n"), ParseError);
        CHECK_THROWS_AS(load_curve_file("/nonexistent/curve.csv"), NotFoundError);
    }
}

TEST_SUITE("threshold crossing") {
    TEST_CASE("first qualifying evaluation") {
        const auto c = make_curve({{1, 0.30}, {2, 0.50}, {3, 0.791}, {4, 0.80}});
        CHECK(epochs_to_threshold(c, Threshold{}) == 3);
        CHECK_FALSE(epochs_to_threshold(make_curve({{1, 0.5}, {2, 0.70}}), Threshold{}).has_value());
    }

    TEST_CASE("metric mismatch and threshold range") {
        const auto c = make_curve({{1, 0.9}});
        CHECK_THROWS_AS(epochs_to_threshold(c, Threshold::make("top1", 0.5)), ValidationError);
        CHECK_THROWS_AS(Threshold::make("top5", 0.0), ValidationError);
        CHECK_THROWS_AS(Threshold::make("top5", 1.0), ValidationError);
    }

    TEST_CASE("shipped curves cross where their records say") {
        CHECK(epochs_to_threshold(data::builtin_curve("googlenet"), Threshold{}) == 8);
        CHECK(epochs_to_threshold(data::builtin_curve("alexnet"), Threshold{}) == 90);
        CHECK(epochs_to_threshold(data::builtin_curve("vgg11"), Threshold{}) == 12);
        CHECK(epochs_to_threshold(data::builtin_curve("resnet50"), Threshold{}) == 8);
    }

    TEST_CASE("raising the threshold never gives an earlier epoch") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> acc(0.0, 1.0);
        for (int trial = 0; trial < 300; ++trial) {
            LearningCurve c;
            std::int64_t epoch = 0;
            for (int i = 0; i < 12; ++i) {
                epoch += 1 + static_cast<std::int64_t>(rng() % 3);
                c.points.push_back({epoch, acc(rng), std::nullopt});
            }
            double t1 = 0.01 + 0.98 * acc(rng);
            double t2 = 0.01 + 0.98 * acc(rng);
            if (t1 > t2) std::swap(t1, t2);
            const auto e1 = epochs_to_threshold(c, Threshold::make("top5", t1));
            const auto e2 = epochs_to_threshold(c, Threshold::make("top5", t2));
            if (e2) {
                REQUIRE(e1.has_value());
                REQUIRE(*e1 <= *e2);
            }
        }
    }
}

TEST_SUITE("training compute") {
    TEST_CASE("direct products") {
        CHECK(compute_to_threshold(8, 2.00e9) == doctest::Approx(6.144e16).epsilon(1e-12));
        CHECK(compute_to_threshold(1, 1, 1, 1) == 1.0);
        CHECK(compute_to_threshold(90, 0.77e9) == doctest::Approx(90.0 * 0.77e9 * 1.28e6 * 3).epsilon(1e-12));
        CHECK(compute_to_threshold(90, 0.77e9) / 1e15 == doctest::Approx(266.112).epsilon(1e-9));
    }

    TEST_CASE("linear in each argument and positive") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> u(0.1, 100.0);
        for (int trial = 0; trial < 200; ++trial) {
            const double e = u(rng), f = u(rng) * 1e8, i = u(rng) * 1e4, m = u(rng) / 10;
            const double base = compute_to_threshold(e, f, i, m);
            REQUIRE(base > 0.0);
            const double k = u(rng);
            REQUIRE(compute_to_threshold(k * e, f, i, m) == doctest::Approx(k * base).epsilon(1e-12));
            REQUIRE(compute_to_threshold(e, k * f, i, m) == doctest::Approx(k * base).epsilon(1e-12));
            REQUIRE(compute_to_threshold(e, f, k * i, m) == doctest::Approx(k * base).epsilon(1e-12));
            REQUIRE(compute_to_threshold(e, f, i, k * m) == doctest::Approx(k * base).epsilon(1e-12));
        }
    }

    TEST_CASE("non-positive arguments are rejected") {
        CHECK_THROWS_AS(compute_to_threshold(0, 1), ValidationError);
        CHECK_THROWS_AS(compute_to_threshold(1, -1), ValidationError);
        CHECK_THROWS_AS(compute_to_threshold(1, 1, 0), ValidationError);
        CHECK_THROWS_AS(compute_to_threshold(1, 1, 1, 0), ValidationError);
    }

    TEST_CASE("compute curves") {
        const auto one = to_compute_curve(make_curve({{1, 0.5}}), 1, 1, 1);
        REQUIRE(one.points.size() == 1);
        CHECK(one.points[0] == ComputePoint{1.0, 0.5});

        const auto alex = data::builtin_curve("alexnet");
        const auto cc = to_compute_curve(alex, 0.77e9);
        REQUIRE(cc.points.size() == alex.points.size());
        for (std::size_t i = 0; i < cc.points.size(); ++i) CHECK(cc.points[i].accuracy == alex.points[i].accuracy);
        CHECK(cc.points.back().flops == doctest::Approx(compute_to_threshold(90, 0.77e9)).epsilon(1e-12));

        LearningCurve recorded = make_curve({{1, 0.2}, {2, 0.4}});
        recorded.points[0].cumulative_flops = 123.0;
        recorded.points[1].cumulative_flops = 456.0;
        const auto passthrough = to_compute_curve(recorded, 1e9);
        CHECK(passthrough.points[0].flops == 123.0);
        CHECK(passthrough.points[1].flops == 456.0);
    }
}

TEST_SUITE("dominance") {
    TEST_CASE("pointwise better curve dominates") {
        const auto a = make_compute({{1e15, 0.50}, {1e16, 0.80}});
        const auto b = make_compute({{1e15, 0.40}, {1e16, 0.70}});
        CHECK(dominance(a, b).relation == Relation::a_dominates);
        CHECK(dominance(b, a).relation == Relation::b_dominates);
        CHECK(dominance(a, a).relation == Relation::equivalent);
    }

    TEST_CASE("crossing curves are incomparable with witnesses at each end") {
        const auto a = make_compute({{1e15, 0.50}, {1e16, 0.60}});
        const auto b = make_compute({{1e15, 0.40}, {1e16, 0.70}});
        const auto r = dominance(a, b);
        REQUIRE(r.relation == Relation::incomparable);
        REQUIRE(r.a_leads_at.has_value());
        REQUIRE(r.b_leads_at.has_value());
        CHECK(*r.a_leads_at == doctest::Approx(1e15));
        CHECK(*r.b_leads_at == doctest::Approx(1e16));
        CHECK(grid_oracle(a, b) == Relation::incomparable);
    }

    TEST_CASE("disjoint compute ranges are incomparable") {
        const auto a = make_compute({{1e15, 0.5}, {1e16, 0.6}});
        const auto b = make_compute({{1e17, 0.7}, {1e18, 0.8}});
        const auto r = dominance(a, b);
        CHECK(r.relation == Relation::incomparable);
        CHECK_FALSE(r.a_leads_at.has_value());
    }

    TEST_CASE("random pairs agree with a dense grid") {
        std::mt19937 rng(4242);
        for (int trial = 0; trial < 500; ++trial) {
            const auto a = random_compute(rng);
            const auto b = random_compute(rng);
            CAPTURE(trial);
            const auto r = dominance(a, b);
            REQUIRE(r.relation == grid_oracle(a, b));
            REQUIRE(dominance(b, a).relation == swapped(r.relation));
            REQUIRE(dominance(a, a).relation == Relation::equivalent);
            if (r.relation == Relation::incomparable && r.a_leads_at) {
                const double xa = std::log10(*r.a_leads_at);
                const double xb = std::log10(*r.b_leads_at);
                REQUIRE(oracle_accuracy(a, xa) > oracle_accuracy(b, xa));
                REQUIRE(oracle_accuracy(b, xb) > oracle_accuracy(a, xb));
            }
        }
    }

    TEST_CASE("interpolation is linear in log compute") {
        const auto c = make_compute({{1e15, 0.2}, {1e17, 0.6}});
        CHECK(accuracy_at(c, 1e16) == doctest::Approx(0.4));
        CHECK(accuracy_at(c, 1e15) == 0.2);
        CHECK_THROWS_AS(accuracy_at(c, 1e18), ValidationError);
    }
}
