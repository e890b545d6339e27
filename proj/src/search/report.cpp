#include "hlag/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace hlag {

using json = nlohmann::ordered_json;

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

namespace {

// Infinite margins cannot be represented in JSON.
json number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string support_string(const OptResult& result)
{
    std::string out;
    for (Vertex v : result.support_vertices())
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

} // namespace

std::string to_json(const VerificationReport& report)
{
    json params = json::object();
    for (const auto& [key, value] : report.params)
        params[key] = value;
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back(json{{"label", c.label},
                              {"lhs", number(c.lhs)},
                              {"rhs", number(c.rhs)},
                              {"margin", number(c.margin)},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
    }
    json doc{{"name", report.name},
             {"params", params},
             {"lambda_G", number(report.lambda_G)},
             {"lambda_Crm", number(report.lambda_Crm)},
             {"checks", checks},
             {"converged_all", report.converged_all},
             {"passed", report.passed()},
             {"notes", report.notes}};
    return doc.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report)
{
    std::string out = "label,lhs,rhs,margin,tolerance,pass\n";
    for (const auto& c : report.checks) {
        out += csv_field(c.label) + "," + format_double(c.lhs) + "," + format_double(c.rhs) + ","
             + format_double(c.margin) + "," + format_double(c.tolerance) + "," + (c.pass ? "true" : "false") + "\n";
    }
    return out;
}

std::string to_text(const VerificationReport& report)
{
    std::ostringstream os;
    os << report.name;
    for (const auto& [key, value] : report.params)
        os << " " << key << "=" << value;
    os << "\nlambda(G)       = " << format_double(report.lambda_G)
       << "\nlambda(C_{r,m}) = " << format_double(report.lambda_Crm) << "\n\n";
    std::size_t width = 5;
    for (const auto& c : report.checks)
        width = std::max(width, c.label.size());
    for (const auto& c : report.checks) {
        os << (c.pass ? "ok    " : "FAIL  ") << c.label << std::string(width - c.label.size() + 2, ' ')
           << "margin " << format_double(c.margin) << "\n";
    }
    for (const auto& note : report.notes)
        os << "note: " << note << "\n";
    if (!report.converged_all)
        os << "note: at least one optimization did not meet the KKT tolerance\n";
    os << (report.passed() ? "PASSED" : "FAILED") << "\n";
    return os.str();
}

std::string to_json(const OptResult& result)
{
    json support = json::array();
    for (Vertex v : result.support_vertices())
        support.push_back(v);
    json doc{{"lambda", result.value},
             {"weights", std::vector<double>(result.weighting.values().begin(), result.weighting.values().end())},
             {"support", support},
             {"kkt_residual", result.kkt_residual},
             {"converged", result.converged},
             {"iterations", result.iterations}};
    return doc.dump(2) + "\n";
}

std::string to_text(const OptResult& result)
{
    std::ostringstream os;
    os << "lambda       " << format_double(result.value) << "\n"
       << "support      " << support_string(result) << "\n"
       << "kkt_residual " << format_double(result.kkt_residual) << "\n"
       << "converged    " << (result.converged ? "yes" : "no") << "\n"
       << "iterations   " << result.iterations << "\n"
       << "weights\n";
    for (std::size_t v = 0; v < result.weighting.size(); ++v)
        os << "  x_" << v + 1 << " = " << format_double(result.weighting[v]) << "\n";
    return os.str();
}

} // namespace hlag
