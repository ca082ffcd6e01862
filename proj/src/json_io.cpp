#include "crossedcoh/json_io.hpp"

#include <fstream>
#include <map>
#include <set>

namespace ccoh {

namespace {

void require_fields(const json& j, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const std::string& where) {
    if (!j.is_object()) throw schema_error(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw schema_error(where + ": unknown field \"" + key + "\"");
    }
    for (const std::string& key : required)
        if (!j.contains(key)) throw schema_error(where + ": missing field \"" + key + "\"");
}

std::vector<Elt> parse_index_array(const json& j, int bound, const std::string& where) {
    if (!j.is_array()) throw schema_error(where + ": expected an array");
    std::vector<Elt> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw schema_error(where + ": expected integer entries");
        int x = v.get<int>();
        if (x < 0 || x >= bound) throw schema_error(where + ": index " + std::to_string(x) + " out of range");
        out.push_back(x);
    }
    return out;
}

std::map<std::string, Elt> name_index(const FiniteGroup& g) {
    std::map<std::string, Elt> m;
    for (Elt x = 0; x < g.order; ++x) m[g.name_of(x)] = x;
    return m;
}

}  // namespace

FiniteGroup parse_group(const json& j, const std::string& where) {
    require_fields(j, {"order", "table"}, {"names"}, where);
    if (!j["order"].is_number_integer()) throw schema_error(where + ".order: expected an integer");
    const int n = j["order"].get<int>();
    if (n <= 0) throw schema_error(where + ".order: must be positive");
    if (!j["table"].is_array() || j["table"].size() != static_cast<std::size_t>(n))
        throw schema_error(where + ".table: expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Elt>> table;
    for (std::size_t i = 0; i < j["table"].size(); ++i)
        table.push_back(parse_index_array(j["table"][i], n, where + ".table[" + std::to_string(i) + "]"));
    std::optional<std::vector<std::string>> names;
    if (j.contains("names")) {
        if (!j["names"].is_array() || j["names"].size() != static_cast<std::size_t>(n))
            throw schema_error(where + ".names: expected " + std::to_string(n) + " entries");
        std::vector<std::string> nm;
        for (const auto& v : j["names"]) {
            if (!v.is_string()) throw schema_error(where + ".names: expected strings");
            nm.push_back(v.get<std::string>());
        }
        std::set<std::string> uniq(nm.begin(), nm.end());
        if (uniq.size() != nm.size()) throw schema_error(where + ".names: duplicate names");
        names = std::move(nm);
    }
    try {
        return make_group(table, names);
    } catch (const not_a_group& e) {
        throw schema_error(where + ": " + e.what());
    }
}

json serialize_group(const FiniteGroup& g) {
    json j;
    j["order"] = g.order;
    j["table"] = g.table;
    if (g.names) j["names"] = *g.names;
    return j;
}

GammaGroup parse_gamma_group(const json& j, const std::string& where) {
    require_fields(j, {"gamma", "group", "action"}, {}, where);
    FiniteGroup gamma = parse_group(j["gamma"], where + ".gamma");
    FiniteGroup group = parse_group(j["group"], where + ".group");
    if (!j["action"].is_object()) throw schema_error(where + ".action: expected an object");

    std::map<std::string, Elt> names = name_index(gamma);
    std::vector<std::vector<Elt>> action(gamma.order);
    std::vector<Elt> id(group.order);
    for (Elt x = 0; x < group.order; ++x) id[x] = x;
    for (auto& p : action) p = id;

    for (const auto& [key, value] : j["action"].items()) {
        auto it = names.find(key);
        if (it == names.end())
            throw schema_error(where + ".action: \"" + key + "\" is not a gamma element");
        action[it->second] =
            parse_index_array(value, group.order, where + ".action[\"" + key + "\"]");
        if (action[it->second].size() != static_cast<std::size_t>(group.order))
            throw schema_error(where + ".action[\"" + key + "\"]: wrong length");
    }
    try {
        return make_gamma_group(std::move(gamma), std::move(group), std::move(action));
    } catch (const not_an_action& e) {
        throw schema_error(where + ": " + e.what());
    }
}

json serialize_gamma_group(const GammaGroup& g) {
    json j;
    j["gamma"] = serialize_group(g.gamma);
    j["group"] = serialize_group(g.group);
    json action = json::object();
    for (Elt s = 0; s < g.gamma.order; ++s) {
        bool trivial = true;
        for (Elt x = 0; x < g.group.order && trivial; ++x)
            if (g.action[s][x] != x) trivial = false;
        if (!trivial) action[g.gamma.name_of(s)] = g.action[s];
    }
    j["action"] = action;
    return j;
}

CrossedModuleDoc parse_crossed_module(const json& j, const std::string& where) {
    require_fields(j, {"gammaA", "gammaG", "rho", "theta"}, {"braiding"}, where);
    GammaGroup ga = parse_gamma_group(j["gammaA"], where + ".gammaA");
    GammaGroup gg = parse_gamma_group(j["gammaG"], where + ".gammaG");
    if (ga.gamma.table != gg.gamma.table)
        throw schema_error(where + ": gammaA and gammaG have different gamma groups");

    std::vector<Elt> rho = parse_index_array(j["rho"], gg.group.order, where + ".rho");
    if (rho.size() != static_cast<std::size_t>(ga.group.order))
        throw schema_error(where + ".rho: wrong length");

    if (!j["theta"].is_object()) throw schema_error(where + ".theta: expected an object");
    std::map<std::string, Elt> gnames = name_index(gg.group);
    std::vector<std::vector<Elt>> theta(gg.group.order);
    std::vector<Elt> id(ga.group.order);
    for (Elt x = 0; x < ga.group.order; ++x) id[x] = x;
    for (auto& p : theta) p = id;
    for (const auto& [key, value] : j["theta"].items()) {
        auto it = gnames.find(key);
        if (it == gnames.end())
            throw schema_error(where + ".theta: \"" + key + "\" is not a base element");
        theta[it->second] =
            parse_index_array(value, ga.group.order, where + ".theta[\"" + key + "\"]");
        if (theta[it->second].size() != static_cast<std::size_t>(ga.group.order))
            throw schema_error(where + ".theta[\"" + key + "\"]: wrong length");
    }

    CrossedModuleDoc doc;
    doc.cm = make_crossed_module(std::move(ga), std::move(gg), std::move(rho), std::move(theta));
    if (j.contains("braiding")) {
        const json& br = j["braiding"];
        if (!br.is_array() || br.size() != static_cast<std::size_t>(doc.cm.G().order))
            throw schema_error(where + ".braiding: expected a square table over the base group");
        Braiding b;
        b.cm = doc.cm;
        for (std::size_t i = 0; i < br.size(); ++i) {
            b.pairing.push_back(parse_index_array(br[i], doc.cm.A().order,
                                                  where + ".braiding[" + std::to_string(i) + "]"));
            if (b.pairing.back().size() != static_cast<std::size_t>(doc.cm.G().order))
                throw schema_error(where + ".braiding[" + std::to_string(i) + "]: wrong length");
        }
        doc.braiding = std::move(b);
    }
    return doc;
}

json serialize_crossed_module(const CrossedModuleDoc& doc) {
    json j;
    j["gammaA"] = serialize_gamma_group(doc.cm.coeff);
    j["gammaG"] = serialize_gamma_group(doc.cm.base);
    j["rho"] = doc.cm.rho;
    json theta = json::object();
    for (Elt g = 0; g < doc.cm.G().order; ++g) {
        bool trivial = true;
        for (Elt a = 0; a < doc.cm.A().order && trivial; ++a)
            if (doc.cm.theta[g][a] != a) trivial = false;
        if (!trivial) theta[doc.cm.G().name_of(g)] = doc.cm.theta[g];
    }
    j["theta"] = theta;
    if (doc.braiding) j["braiding"] = doc.braiding->pairing;
    return j;
}

GammaModule parse_gamma_module(const json& j, const std::string& where) {
    require_fields(j, {"generators", "relations", "gamma", "action"}, {}, where);
    if (!j["generators"].is_number_integer())
        throw schema_error(where + ".generators: expected an integer");
    const int p = j["generators"].get<int>();
    if (p < 0) throw schema_error(where + ".generators: must be nonnegative");

    if (!j["relations"].is_array()) throw schema_error(where + ".relations: expected an array");
    IntMat rel(p, j["relations"].size());
    for (std::size_t c = 0; c < j["relations"].size(); ++c) {
        const json& row = j["relations"][c];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(p))
            throw schema_error(where + ".relations[" + std::to_string(c) + "]: expected " +
                               std::to_string(p) + " integers");
        for (int i = 0; i < p; ++i) {
            if (!row[i].is_number_integer())
                throw schema_error(where + ".relations: expected integer entries");
            rel(i, c) = row[i].get<long long>();
        }
    }

    FiniteGroup gamma = parse_group(j["gamma"], where + ".gamma");
    if (!j["action"].is_object()) throw schema_error(where + ".action: expected an object");
    std::map<std::string, Elt> names = name_index(gamma);
    std::vector<IntMat> action(gamma.order, IntMat::identity(p));
    for (const auto& [key, value] : j["action"].items()) {
        auto it = names.find(key);
        if (it == names.end())
            throw schema_error(where + ".action: \"" + key + "\" is not a gamma element");
        if (!value.is_array() || value.size() != static_cast<std::size_t>(p))
            throw schema_error(where + ".action[\"" + key + "\"]: expected a " + std::to_string(p) +
                               "-row matrix");
        IntMat a(p, p);
        for (int i = 0; i < p; ++i) {
            const json& row = value[i];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(p))
                throw schema_error(where + ".action[\"" + key + "\"]: rows need " +
                                   std::to_string(p) + " integers");
            for (int k = 0; k < p; ++k) {
                if (!row[k].is_number_integer())
                    throw schema_error(where + ".action: expected integer entries");
                a(i, k) = row[k].get<long long>();
            }
        }
        action[it->second] = std::move(a);
    }
    try {
        return make_gamma_module(make_fg_group(p, std::move(rel)), std::move(gamma),
                                 std::move(action));
    } catch (const error& e) {
        throw schema_error(where + ": " + e.what());
    }
}

json serialize_gamma_module(const GammaModule& m) {
    json j;
    j["generators"] = m.module.generators;
    json rel = json::array();
    for (std::size_t c = 0; c < m.module.relations.cols(); ++c) {
        json row = json::array();
        for (std::size_t i = 0; i < m.module.generators; ++i)
            row.push_back(m.module.relations(i, c).convert_to<long long>());
        rel.push_back(row);
    }
    j["relations"] = rel;
    j["gamma"] = serialize_group(m.gamma);
    json action = json::object();
    for (Elt s = 0; s < m.gamma.order; ++s) {
        bool trivial = true;
        for (std::size_t i = 0; i < m.module.generators && trivial; ++i)
            for (std::size_t k = 0; k < m.module.generators && trivial; ++k)
                if (m.action[s](i, k) != (i == k ? 1 : 0)) trivial = false;
        if (trivial) continue;
        json mat = json::array();
        for (std::size_t i = 0; i < m.module.generators; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < m.module.generators; ++k)
                row.push_back(m.action[s](i, k).convert_to<long long>());
            mat.push_back(row);
        }
        action[m.gamma.name_of(s)] = mat;
    }
    j["action"] = action;
    return j;
}

std::vector<Elt> parse_psi(const json& j, const FiniteGroup& gamma, const FiniteGroup& g,
                           const std::string& where) {
    require_fields(j, {"psi"}, {}, where);
    std::vector<Elt> psi = parse_index_array(j["psi"], g.order, where + ".psi");
    if (psi.size() != static_cast<std::size_t>(gamma.order))
        throw schema_error(where + ".psi: expected one entry per gamma element");
    return psi;
}

Cochain1 parse_cochain1(const json& j, const CrossedModule& cm, const std::string& where) {
    require_fields(j, {"u", "psi"}, {}, where);
    const int m = cm.gamma().order;
    Cochain1 c;
    c.psi = parse_index_array(j["psi"], cm.G().order, where + ".psi");
    if (c.psi.size() != static_cast<std::size_t>(m))
        throw schema_error(where + ".psi: expected one entry per gamma element");
    if (!j["u"].is_array() || j["u"].size() != static_cast<std::size_t>(m))
        throw schema_error(where + ".u: expected a " + std::to_string(m) + "-row table");
    for (std::size_t s = 0; s < j["u"].size(); ++s) {
        std::vector<Elt> row =
            parse_index_array(j["u"][s], cm.A().order, where + ".u[" + std::to_string(s) + "]");
        if (row.size() != static_cast<std::size_t>(m))
            throw schema_error(where + ".u[" + std::to_string(s) + "]: wrong length");
        c.u.insert(c.u.end(), row.begin(), row.end());
    }
    return c;
}

json serialize_cochain1(const Cochain1& c) {
    json j;
    const std::size_t m = c.psi.size();
    json u = json::array();
    for (std::size_t s = 0; s < m; ++s) {
        json row = json::array();
        for (std::size_t t = 0; t < m; ++t) row.push_back(c.u[s * m + t]);
        u.push_back(row);
    }
    j["u"] = u;
    j["psi"] = c.psi;
    return j;
}

DocKind detect_kind(const json& j) {
    if (!j.is_object()) return DocKind::unknown;
    if (j.contains("rho")) return DocKind::crossed_module;
    if (j.contains("generators")) return DocKind::module;
    if (j.contains("action")) return DocKind::gamma_group;
    if (j.contains("table")) return DocKind::group;
    return DocKind::unknown;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw schema_error(path + ": " + e.what());
    }
    return j;
}

}  // namespace ccoh
