#include "algoeff/curves.hpp"
#include "algoeff/error.hpp"
#include "algoeff/trends.hpp"
#include "common/strict_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace algoeff::trends {

namespace {

using detail::json;
using detail::StrictObject;
using ojson = nlohmann::ordered_json;

EfficiencyRecord parse_record(const json& value, const std::string& path) {
    const StrictObject o(value, path);
    o.allow_only({"name", "date", "task", "threshold", "epochs", "gigaflops_per_image", "images_per_epoch",
                  "backward_multiplier", "total_training_flops", "notes", "published"});
    EfficiencyRecord r;
    r.name = o.string("name");
    try {
        r.date = Date::parse(o.string("date"));
    } catch (const ParseError& e) {
        throw ParseError(o.path("date") + ": " + e.what());
    }
    r.task = o.string("task");
    r.threshold = o.has("threshold") ? o.string("threshold") : "";
    r.epochs = o.optional_number("epochs");
    r.gigaflops_per_image = o.optional_number("gigaflops_per_image");
    r.images_per_epoch = o.optional_number("images_per_epoch");
    if (o.has("backward_multiplier")) r.backward_multiplier = o.number("backward_multiplier");
    r.notes = o.has("notes") ? o.string("notes") : "";
    if (o.has("published")) {
        const StrictObject p(o.raw("published"), o.path("published"));
        p.allow_only({"teraflop_s_days", "gigaflops_thop", "gigaflops_paper"});
        r.published.teraflop_s_days = p.optional_number("teraflop_s_days");
        r.published.gigaflops_thop = p.optional_number("gigaflops_thop");
        r.published.gigaflops_paper = p.optional_number("gigaflops_paper");
    }

    const std::string who = path + " ('" + r.name + "'): ";
    const auto given_total = o.optional_number("total_training_flops");
    if (r.has_epoch_fields()) {
        if (!(*r.epochs > 0 && *r.gigaflops_per_image > 0 && *r.images_per_epoch > 0 && r.backward_multiplier > 0)) {
            throw ValidationError(who + "epoch fields must be > 0");
        }
        r.total_training_flops = curves::compute_to_threshold(*r.epochs, *r.flops_per_image(), *r.images_per_epoch,
                                                              r.backward_multiplier);
        if (given_total && std::abs(*given_total - r.total_training_flops) > 1e-6 * r.total_training_flops) {
            throw ValidationError(who + "total_training_flops " + std::to_string(*given_total) +
                                  " disagrees with epochs x flops/image x images x multiplier = " +
                                  std::to_string(r.total_training_flops));
        }
    } else if (r.epochs || r.gigaflops_per_image || r.images_per_epoch) {
        throw ValidationError(who + "epochs, gigaflops_per_image and images_per_epoch must be given together");
    } else if (given_total) {
        r.total_training_flops = *given_total;
    } else {
        throw ValidationError(who + "needs either the epoch fields or total_training_flops");
    }
    try {
        validate_record(r);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return r;
}

} // namespace

std::vector<EfficiencyRecord> parse_records(std::string_view json_text) {
    const json doc = detail::parse_json_text(json_text);
    if (!doc.is_array()) throw ParseError("$: records file must be a JSON array");
    std::vector<EfficiencyRecord> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        out.push_back(parse_record(doc[i], "$[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<EfficiencyRecord> load_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("records file not found: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_records(buffer.str());
    } catch (const ParseError& e) {
        throw e.in_file(path);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string records_to_json(const std::vector<EfficiencyRecord>& records) {
    ojson doc = ojson::array();
    for (const auto& r : records) {
        ojson o;
        o["name"] = r.name;
        o["date"] = r.date.iso();
        o["task"] = r.task;
        o["threshold"] = r.threshold;
        if (r.has_epoch_fields()) {
            o["epochs"] = *r.epochs;
            o["gigaflops_per_image"] = *r.gigaflops_per_image;
            o["images_per_epoch"] = *r.images_per_epoch;
            o["backward_multiplier"] = r.backward_multiplier;
        }
        o["total_training_flops"] = r.total_training_flops;
        o["notes"] = r.notes;
        if (!r.published.empty()) {
            ojson p = ojson::object();
            if (r.published.teraflop_s_days) p["teraflop_s_days"] = *r.published.teraflop_s_days;
            if (r.published.gigaflops_thop) p["gigaflops_thop"] = *r.published.gigaflops_thop;
            if (r.published.gigaflops_paper) p["gigaflops_paper"] = *r.published.gigaflops_paper;
            o["published"] = std::move(p);
        }
        doc.push_back(std::move(o));
    }
    return doc.dump(2) + "\n";
}

void save_records_file(const std::string& path, const std::vector<EfficiencyRecord>& records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write records file: " + path);
    out << records_to_json(records);
    if (!out) throw Error("failed writing records file: " + path);
}

} // namespace algoeff::trends
