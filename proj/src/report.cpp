#include "vcdim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace vcdim::report {

json to_json(const Certificate& c) {
    return {{"epsilon", c.epsilon}, {"delta", c.delta}, {"m", c.sample_size_m}};
}

Certificate certificate_from_json(const json& j) {
    return {j.at("epsilon").get<double>(), j.at("delta").get<double>(), j.at("m").get<std::uint64_t>()};
}

json to_json(const DimensionRecord& r) {
    json j = {{"d", r.d},
              {"m", r.m},
              {"z_m", r.z_m},
              {"unresolved", r.unresolved},
              {"z_is_lower_bound", r.z_is_lower_bound},
              {"short_circuit", r.short_circuit}};
    j["first_shattered_draw"] = r.first_shattered_draw ? json(*r.first_shattered_draw) : json(nullptr);
    j["elapsed_s"] = r.elapsed_s;
    return j;
}

DimensionRecord dimension_record_from_json(const json& j) {
    DimensionRecord r;
    r.d = j.at("d").get<std::size_t>();
    r.m = j.at("m").get<std::uint64_t>();
    r.z_m = j.at("z_m").get<std::uint64_t>();
    r.unresolved = j.at("unresolved").get<std::uint64_t>();
    r.z_is_lower_bound = j.at("z_is_lower_bound").get<bool>();
    r.short_circuit = j.at("short_circuit").get<bool>();
    if (!j.at("first_shattered_draw").is_null())
        r.first_shattered_draw = j.at("first_shattered_draw").get<std::uint64_t>();
    r.elapsed_s = j.value("elapsed_s", 0.0);
    return r;
}

json to_json(const VcEstimate& e) {
    json j;
    j["class"] = e.class_name;
    j["sampler"] = e.sampler;
    j["seed"] = e.seed;
    j["certificate"] = to_json(e.certificate);
    json rows = json::array();
    for (const auto& r : e.per_d)
        rows.push_back(to_json(r));
    j["per_d"] = std::move(rows);
    j["vc"] = e.vc ? json(*e.vc) : json("infinite");
    j["terminated_at_dmax"] = e.terminated_at_dmax;
    j["unresolved_at_stop"] = e.unresolved_at_stop();
    return j;
}

VcEstimate vc_estimate_from_json(const json& j) {
    VcEstimate e;
    e.class_name = j.at("class").get<std::string>();
    e.sampler = j.at("sampler").get<std::string>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.certificate = certificate_from_json(j.at("certificate"));
    for (const auto& r : j.at("per_d"))
        e.per_d.push_back(dimension_record_from_json(r));
    if (j.at("vc").is_number_unsigned())
        e.vc = j.at("vc").get<std::size_t>();
    e.terminated_at_dmax = j.at("terminated_at_dmax").get<bool>();
    return e;
}

json to_json(const ShatterVerdict& v) {
    json j;
    j["shattered"] = v.shattered;
    j["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
    j["erm_calls"] = v.erm_calls;
    j["unresolved"] = v.unresolved;
    if (v.failure) {
        const auto& f = *v.failure;
        json fj = {{"loss_numerator", f.loss_numerator},
                   {"sample_size", f.sample_size},
                   {"budget_exhausted", f.budget_exhausted},
                   {"exact_loss", f.exact_loss}};
        fj["predictions"] = f.predictions ? json(f.predictions->to_string()) : json(nullptr);
        fj["weights"] = f.weights ? json(*f.weights) : json(nullptr);
        j["failure"] = std::move(fj);
    } else {
        j["failure"] = nullptr;
    }
    j["elapsed_s"] = v.elapsed.count();
    return j;
}

ShatterVerdict shatter_verdict_from_json(const json& j) {
    ShatterVerdict v;
    v.shattered = j.at("shattered").get<bool>();
    if (!j.at("witness").is_null())
        v.witness = LabelVector::parse(j.at("witness").get<std::string>());
    v.erm_calls = j.at("erm_calls").get<std::uint64_t>();
    v.unresolved = j.at("unresolved").get<bool>();
    if (const auto& fj = j.at("failure"); !fj.is_null()) {
        ErmOutcome f;
        f.loss_numerator = fj.at("loss_numerator").get<std::size_t>();
        f.sample_size = fj.at("sample_size").get<std::size_t>();
        f.budget_exhausted = fj.at("budget_exhausted").get<bool>();
        f.exact_loss = fj.at("exact_loss").get<bool>();
        if (!fj.at("predictions").is_null())
            f.predictions = LabelVector::parse(fj.at("predictions").get<std::string>());
        if (!fj.at("weights").is_null())
            f.weights = fj.at("weights").get<std::vector<double>>();
        v.failure = std::move(f);
    }
    v.elapsed = std::chrono::duration<double>(j.value("elapsed_s", 0.0));
    return v;
}

json strip_timing(const json& j) {
    if (j.is_object()) {
        json out = json::object();
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "elapsed_s")
                out[it.key()] = strip_timing(it.value());
        return out;
    }
    if (j.is_array()) {
        json out = json::array();
        for (const auto& v : j)
            out.push_back(strip_timing(v));
        return out;
    }
    return j;
}

std::string format_seconds(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", seconds);
    return buf;
}

std::string format_vc(const std::optional<std::size_t>& vc) {
    return vc ? std::to_string(*vc) : std::string("inf");
}

void write_per_d_csv(std::ostream& out, const VcEstimate& e) {
    out << "d,m,z_m,unresolved,elapsed_s\n";
    for (const auto& r : e.per_d)
        out << r.d << ',' << r.m << ',' << r.z_m << ',' << r.unresolved << ',' << format_seconds(r.elapsed_s)
            << '\n';
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "n,vc,elapsed_s\n";
    for (const auto& r : rows)
        out << r.n << ',' << format_vc(r.vc) << ',' << format_seconds(r.elapsed_s) << '\n';
}

void write_bench_svg(std::ostream& out, const std::vector<BenchRow>& rows, const std::string& title) {
    constexpr double width = 640, height = 400, left = 70, right = 20, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double n_min = 0, n_max = 1, t_max = 1e-9;
    if (!rows.empty()) {
        n_min = double(rows.front().n);
        n_max = double(rows.front().n);
        for (const auto& r : rows) {
            n_min = std::min(n_min, double(r.n));
            n_max = std::max(n_max, double(r.n));
            t_max = std::max(t_max, r.elapsed_s);
        }
    }
    if (n_max == n_min)
        n_max = n_min + 1;
    auto px = [&](double n) { return left + (n - n_min) / (n_max - n_min) * plot_w; };
    auto py = [&](double t) { return top + plot_h - t / t_max * plot_h; };

    char buf[128];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
        << "</text>\n";
    out << "  <line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.2f", px(double(r.n)));
        out << "  <text x=\"" << buf << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\" font-size=\"12\">" << r.n << "</text>\n";
    }
    std::snprintf(buf, sizeof buf, "%.3g", t_max);
    out << "  <text x=\"" << left - 6 << "\" y=\"" << top + 4 << "\" text-anchor=\"end\" font-size=\"12\">" << buf
        << "</text>\n";
    out << "  <text x=\"" << left - 6 << "\" y=\"" << top + plot_h
        << "\" text-anchor=\"end\" font-size=\"12\">0</text>\n";
    out << "  <text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-size=\"14\">ambient dimension n</text>\n";
    out << "  <text x=\"18\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" font-size=\"14\" "
        << "transform=\"rotate(-90 18 " << top + plot_h / 2 << ")\">seconds</text>\n";
    out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", px(double(rows[i].n)), py(rows[i].elapsed_s));
        out << buf;
    }
    out << "\"/>\n</svg>\n";
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

} // namespace vcdim::report
