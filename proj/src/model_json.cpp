#include <fstream>

#include <json.hpp>

#include "levex/levy_models.hpp"

namespace levex {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw DomainError(where, "unknown field '" + it.key() + "'");
    }
}

double need_num(const json& p, const char* key, const std::string& where) {
    if (!p.contains(key)) throw DomainError(where, std::string("missing field '") + key + "'");
    if (!p[key].is_number()) throw DomainError(where, std::string("field '") + key + "' must be a number");
    return p[key].get<double>();
}

JumpDensity parse_jumps(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type"))
        throw DomainError(where, "jumps must be an object with a 'type'");
    const std::string type = j["type"].get<std::string>();
    if (type == "normal") {
        reject_unknown(j, {"type"}, where);
        return normal_jumps();
    }
    if (type == "uniform") {
        reject_unknown(j, {"type", "a", "b"}, where);
        return uniform_jumps(need_num(j, "a", where), need_num(j, "b", where));
    }
    throw DomainError(where, "unknown jump type '" + type + "'");
}

ModelPtr parse_model(const json& cfg) {
    const std::string where = "levy_models.load_model";
    if (!cfg.is_object()) throw DomainError(where, "config must be a JSON object");
    reject_unknown(cfg, {"kind", "params"}, where);
    if (!cfg.contains("kind")) throw DomainError(where, "missing 'kind'");
    const std::string kind = cfg["kind"].get<std::string>();
    const json params = cfg.contains("params") ? cfg["params"] : json::object();

    if (kind == "stable") {
        reject_unknown(params, {"alpha", "normalization"}, where);
        const double alpha = need_num(params, "alpha", where);
        std::string norm = "levy_density";
        if (params.contains("normalization")) norm = params["normalization"].get<std::string>();
        if (norm == "levy_density") return make_symmetric_stable(alpha);
        if (norm == "unit_exponent") return make_symmetric_stable_unit(alpha);
        throw DomainError(where, "normalization must be 'levy_density' or 'unit_exponent'");
    }
    if (kind == "cgmy") {
        reject_unknown(params, {"C", "G", "M", "alpha"}, where);
        return make_cgmy(need_num(params, "C", where), need_num(params, "G", where),
                         need_num(params, "M", where), need_num(params, "alpha", where));
    }
    if (kind == "compound_poisson") {
        reject_unknown(params, {"lambda", "jumps", "drift", "sigma2"}, where);
        const double lambda = need_num(params, "lambda", where);
        if (!params.contains("jumps")) throw DomainError(where, "missing 'jumps'");
        JumpDensity jumps = parse_jumps(params["jumps"], where);
        const double drift = params.contains("drift") ? need_num(params, "drift", where) : 0.0;
        const double sigma2 = params.contains("sigma2") ? need_num(params, "sigma2", where) : 0.0;
        return make_compound_poisson(lambda, std::move(jumps), drift, sigma2);
    }
    if (kind == "brownian") {
        reject_unknown(params, {"sigma2", "b"}, where);
        return make_brownian(need_num(params, "sigma2", where),
                             params.contains("b") ? need_num(params, "b", where) : 0.0);
    }
    if (kind == "sum") {
        reject_unknown(params, {"components"}, where);
        if (!params.contains("components") || !params["components"].is_array())
            throw DomainError(where, "'components' must be an array");
        std::vector<ModelPtr> comps;
        for (const auto& c : params["components"]) comps.push_back(parse_model(c));
        return make_sum(std::move(comps));
    }
    throw DomainError(where, "unknown kind '" + kind + "'");
}

}  // namespace

ModelPtr load_model_json(const std::string& text) {
    json cfg;
    try {
        cfg = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError("levy_models.load_model", std::string("invalid JSON: ") + e.what());
    }
    return parse_model(cfg);
}

ModelPtr load_model_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("levy_models.load_model", "cannot open model file " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return load_model_json(text);
}

}  // namespace levex
