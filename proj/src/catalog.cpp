#include "dioph/catalog.hpp"

#include "json.hpp"

namespace dioph {
namespace catalog {

namespace {

using nlohmann::json;

json builtins() {
    json j = json::object();
    j["sqrt2"] = {{"type", "algebraic"},
                  {"coeffs", {"-2", "0", "1"}},
                  {"bracket", {"1", "2"}}};
    j["sqrt3"] = {{"type", "algebraic"},
                  {"coeffs", {"-3", "0", "1"}},
                  {"bracket", {"1", "2"}}};
    j["cbrt2"] = {{"type", "algebraic"},
                  {"coeffs", {"-2", "0", "0", "1"}},
                  {"bracket", {"1", "2"}}};
    j["phi"] = {{"type", "algebraic"},
                {"coeffs", {"-1", "-1", "1"}},
                {"bracket", {"1", "2"}}};
    j["liouville10"] = {{"type", "liouville"}, {"base", 10}};
    j["liouville2"] = {{"type", "liouville"}, {"base", 2}};
    j["champernowne10"] = {{"type", "champernowne"}, {"base", 10}, {"poly", {"0", "1"}}};
    j["champernowne2"] = {{"type", "champernowne"}, {"base", 2}, {"poly", {"0", "1"}}};
    j["champernowne10sq"] = {{"type", "champernowne"},
                             {"base", 10},
                             {"poly", {"0", "0", "1"}}};
    j["sqrt2cf"] = {{"type", "cf"}, {"pre", {"1"}}, {"period", {"2"}}};
    j["phicf"] = {{"type", "cf"}, {"pre", {"1"}}, {"period", {"1"}}};
    j["rand42"] = {{"type", "digit_random"}, {"seed", 42}, {"base", 10}};
    return j;
}

std::vector<Int> intList(const json& arr) {
    std::vector<Int> out;
    for (const auto& v : arr) out.emplace_back(v.get<std::string>(), 10);
    return out;
}

OraclePtr fromDescriptor(const std::string& name, const json& d) {
    const std::string type = d.at("type").get<std::string>();
    if (type == "algebraic") {
        auto coeffs = intList(d.at("coeffs"));
        return makeAlgebraic(coeffs, ratFromString(d.at("bracket")[0].get<std::string>()),
                             ratFromString(d.at("bracket")[1].get<std::string>()), name);
    }
    if (type == "liouville") return makeLiouville(d.at("base").get<int>());
    if (type == "champernowne")
        return makeChampernowne(d.at("base").get<int>(), intList(d.at("poly")));
    if (type == "cf")
        return makeCfDefined(intList(d.at("pre")), intList(d.at("period")), name);
    if (type == "digit_random")
        return makeDigitRandom(d.at("seed").get<std::uint64_t>(),
                               d.at("base").get<int>());
    if (type == "rational") return makeRationalStub(ratFromString(d.at("value")));
    throw std::invalid_argument("unknown descriptor type: " + type);
}

}  // namespace

std::string manifestJson() { return builtins().dump(2); }

OraclePtr byName(const std::string& name) {
    json b = builtins();
    if (b.contains(name)) return fromDescriptor(name, b.at(name));
    // Parametric families.
    auto parseTail = [](const std::string& s, const std::string& prefix,
                        long& out) -> bool {
        if (s.rfind(prefix, 0) != 0) return false;
        const std::string tail = s.substr(prefix.size());
        if (tail.empty()) return false;
        for (char c : tail)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        out = std::stol(tail);
        return true;
    };
    long v = 0;
    if (parseTail(name, "liouville", v)) return makeLiouville(static_cast<int>(v));
    if (parseTail(name, "champernowne", v))
        return makeChampernowne(static_cast<int>(v), {Int(0), Int(1)});
    if (parseTail(name, "rand", v))
        return makeDigitRandom(static_cast<std::uint64_t>(v), 10);
    if (name.find('/') != std::string::npos || !name.empty())
        try {
            return makeRationalStub(ratFromString(name));
        } catch (const std::exception&) {
        }
    throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace catalog
}  // namespace dioph
