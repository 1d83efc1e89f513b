#include "qladder/serialize.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qladder {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json header(const char* kind) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = kind;
    return j;
}

ordered_json window_json(const Window& w) {
    if (w == Window::exact()) return "exact";
    ordered_json j;
    j["q_max"] = w.q_max;
    j["t_min"] = w.t_min;
    j["t_max"] = w.t_max;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

OutFormat parse_format(const std::string& s) {
    if (s == "text") return OutFormat::text;
    if (s == "json") return OutFormat::json;
    if (s == "csv") return OutFormat::csv;
    throw std::invalid_argument("unknown format: " + s +
                                " (expected text, json, or csv)");
}

std::string render_series(const LaurentQT& s, OutFormat f) {
    switch (f) {
        case OutFormat::text:
            return s.str() + "\n";
        case OutFormat::json: {
            ordered_json j = header("series");
            j["window"] = window_json(s.window());
            ordered_json terms = ordered_json::array();
            for (const auto& [k, c] : s.terms()) {
                ordered_json term;
                term["t"] = k.first;
                term["q"] = k.second;
                term["c"] = c.get_str();
                terms.push_back(std::move(term));
            }
            j["terms"] = std::move(terms);
            return dump(j);
        }
        case OutFormat::csv: {
            std::ostringstream os;
            os << "t,q,c\n";
            for (const auto& [k, c] : s.terms())
                os << k.first << ',' << k.second << ',' << c.get_str() << '\n';
            return os.str();
        }
    }
    return {};
}

std::string render_table(const WeightTable& t, OutFormat f) {
    switch (f) {
        case OutFormat::text: {
            std::ostringstream os;
            for (const auto& [key, c] : t.cells)
                os << "w=" << key.first << " particles=" << key.second << ": "
                   << c.get_str() << "\n";
            return os.str();
        }
        case OutFormat::json: {
            ordered_json j = header("weight_table");
            j["max_particles"] = t.max_particles;
            ordered_json cells = ordered_json::array();
            for (const auto& [key, c] : t.cells) {
                ordered_json cell;
                cell["w"] = key.first;
                cell["particles"] = key.second;
                cell["count"] = c.get_str();
                cells.push_back(std::move(cell));
            }
            j["cells"] = std::move(cells);
            return dump(j);
        }
        case OutFormat::csv: {
            // grid shape: one row per weight, one column per particle count,
            // absent cells left empty
            std::ostringstream os;
            os << "weight";
            for (int p = 0; p <= t.max_particles; ++p) os << ",g" << p;
            os << '\n';
            long long w_lo = 0, w_hi = 0;
            for (const auto& [key, c] : t.cells) {
                w_lo = std::min(w_lo, key.first);
                w_hi = std::max(w_hi, key.first);
            }
            for (long long w = w_lo; w <= w_hi; ++w) {
                os << w;
                for (int p = 0; p <= t.max_particles; ++p) {
                    os << ',';
                    auto it = t.cells.find({w, p});
                    if (it != t.cells.end()) os << it->second.get_str();
                }
                os << '\n';
            }
            return os.str();
        }
    }
    return {};
}

std::string render_dims(const std::vector<long long>& dims, OutFormat f) {
    switch (f) {
        case OutFormat::text: {
            std::ostringstream os;
            os << '(';
            for (size_t i = 0; i < dims.size(); ++i)
                os << (i ? "," : "") << dims[i];
            os << ")\n";
            return os.str();
        }
        case OutFormat::json: {
            ordered_json j = header("dims");
            j["dims"] = dims;
            return dump(j);
        }
        case OutFormat::csv: {
            std::ostringstream os;
            os << "degree,dim\n";
            for (size_t i = 0; i < dims.size(); ++i)
                os << i << ',' << dims[i] << '\n';
            return os.str();
        }
    }
    return {};
}

std::string render_cohomology(const CohomologyReport& r, OutFormat f) {
    switch (f) {
        case OutFormat::text: {
            std::ostringstream os;
            os << "dims:  ";
            for (size_t i = 0; i < r.dims.size(); ++i)
                os << (i ? "," : "") << r.dims[i];
            os << "\nh:     " << r.h_str() << "\neuler: " << r.euler.get_str()
               << "\nchecks: " << (r.checks.ok ? "ok" : "FAILED") << '\n';
            for (const auto& fl : r.checks.failures) os << "  " << fl << '\n';
            return os.str();
        }
        case OutFormat::json: {
            ordered_json j = header("cohomology");
            j["dims"] = r.dims;
            j["ranks"] = r.ranks;
            j["h"] = r.h;
            j["euler"] = r.euler.get_str();
            j["ok"] = r.checks.ok;
            if (!r.checks.ok) j["failures"] = r.checks.failures;
            return dump(j);
        }
        case OutFormat::csv: {
            std::ostringstream os;
            os << "degree,dim,rank,h\n";
            for (size_t i = 0; i < r.dims.size(); ++i)
                os << i << ',' << r.dims[i] << ',' << r.ranks[i] << ',' << r.h[i]
                   << '\n';
            return os.str();
        }
    }
    return {};
}

std::string render_scalar(const std::string& kind, const mpz_class& v,
                          OutFormat f) {
    switch (f) {
        case OutFormat::text:
            return v.get_str() + "\n";
        case OutFormat::json: {
            ordered_json j = header(kind.c_str());
            j["value"] = v.get_str();
            return dump(j);
        }
        case OutFormat::csv:
            return "value\n" + v.get_str() + "\n";
    }
    return {};
}

std::string render_verify(const VerifyReport& r, OutFormat f) {
    if (f == OutFormat::json) {
        ordered_json j = header("verify");
        j["target"] = r.target;
        j["ok"] = r.ok();
        ordered_json sections = ordered_json::array();
        for (const auto& s : r.sections) {
            ordered_json sec;
            sec["name"] = s.name;
            sec["ok"] = s.ok;
            sec["lines"] = s.lines;
            if (!s.ok) sec["failures"] = s.failures;
            sections.push_back(std::move(sec));
        }
        j["sections"] = std::move(sections);
        return dump(j);
    }
    std::ostringstream os;
    os << "verify " << r.target << ": " << (r.ok() ? "ok" : "FAILED") << '\n';
    for (const auto& s : r.sections) {
        os << "[" << (s.ok ? "ok" : "FAILED") << "] " << s.name << '\n';
        for (const auto& l : s.lines) os << "    " << l << '\n';
    }
    return os.str();
}

}  // namespace qladder
