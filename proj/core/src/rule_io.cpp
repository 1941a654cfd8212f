#include "cubforge/rule_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cubforge {

namespace {
using nlohmann::json;

constexpr int kFormatVersion = 1;
}  // namespace

std::string rule_to_json(const CubatureRule& rule, bool approx) {
    json j;
    j["format_version"] = kFormatVersion;
    j["domain"] = to_string(rule.domain());
    j["d"] = rule.dimension();
    j["gamma"] = to_string(rule.gamma().value());
    j["exactness"] = {
        {"kind", rule.exactness().kind == Exactness::Kind::Index ? "index" : "degree"},
        {"value", rule.exactness().value}};
    if (!rule.provenance().empty()) j["provenance"] = rule.provenance();
    json orbits = json::array();
    for (const auto& node : rule.nodes()) {
        json o;
        o["group"] = to_string(node.point.group());
        json rep = json::array();
        for (const auto& v : node.point.representative()) rep.push_back(v.str());
        o["representative"] = std::move(rep);
        if (node.point.group() == OrbitGroup::ExplicitSigned)
            o["signs"] = node.point.signs();
        o["weight"] = node.weight.str();
        if (approx) o["weight_approx"] = node.weight.approx();
        orbits.push_back(std::move(o));
    }
    j["orbits"] = std::move(orbits);
    return j.dump(2) + "\n";
}

CubatureRule rule_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("rule file: ") + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != kFormatVersion)
            throw ParseError("rule file: unsupported format_version");
        Domain domain = domain_from_string(j.at("domain").get<std::string>());
        int d = j.at("d").get<int>();
        WeightExponent gamma(parse_rational(j.at("gamma").get<std::string>()));
        const auto& je = j.at("exactness");
        std::string kind = je.at("kind").get<std::string>();
        if (kind != "index" && kind != "degree")
            throw ParseError("rule file: exactness kind must be index|degree");
        Exactness ex = kind == "index" ? Exactness::index(je.at("value").get<int>())
                                       : Exactness::degree(je.at("value").get<int>());
        std::vector<CubatureRule::Node> nodes;
        for (const auto& o : j.at("orbits")) {
            OrbitGroup g = orbit_group_from_string(o.at("group").get<std::string>());
            std::vector<ExactScalar> rep;
            for (const auto& v : o.at("representative"))
                rep.push_back(ExactScalar::parse(v.get<std::string>()));
            std::vector<int> signs;
            if (o.contains("signs")) signs = o.at("signs").get<std::vector<int>>();
            ExactScalar w = ExactScalar::parse(o.at("weight").get<std::string>());
            nodes.push_back({OrbitPoint(g, std::move(rep), std::move(signs)), w});
        }
        std::string provenance;
        if (j.contains("provenance")) provenance = j.at("provenance").get<std::string>();
        return CubatureRule(domain, d, gamma, ex, std::move(nodes), provenance);
    } catch (const json::exception& e) {
        throw ParseError(std::string("rule file: ") + e.what());
    }
}

void save_rule(const CubatureRule& rule, const std::string& path, bool approx) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << rule_to_json(rule, approx);
}

CubatureRule load_rule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return rule_from_json(ss.str());
}

}  // namespace cubforge
