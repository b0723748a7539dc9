#include "chenlegendre/json_util.hpp"

#include <cstdio>

#include "chenlegendre/errors.hpp"

namespace chl {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

nlohmann::json complex_to_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && j.contains("re"))
        return {j["re"].get<double>(), j.value("im", 0.0)};
    throw ParseError("expected a complex number as [re,im] or {re,im}");
}

namespace {

void dump_rec(const ordered_json& j, std::string& out, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case nlohmann::detail::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += ordered_json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                dump_rec(el, out, indent, depth + 1);
            }
            newline(depth);
            out += ']';
            return;
        }
        case nlohmann::detail::value_t::number_float:
            out += fmt_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

} // namespace

std::string dump_json_17(const ordered_json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

} // namespace chl
