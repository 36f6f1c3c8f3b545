#include "albert/json_io.hpp"

#include <set>
#include <string>

namespace albert {

namespace {

using nlohmann::json;

void require_object(const json& j, std::initializer_list<const char*> keys,
                    const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
    std::set<std::string> expected(keys.begin(), keys.end());
    for (const auto& [key, _] : j.items())
        if (!expected.count(key))
            throw ParseError(std::string(what) + ": unknown field \"" + key + "\"");
    for (const auto& key : expected)
        if (!j.contains(key))
            throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
}

template <std::size_t N>
std::array<double, N> reals(const json& j, const char* what) {
    if (!j.is_array() || j.size() != N)
        throw ParseError(std::string(what) + ": expected an array of " +
                         std::to_string(N) + " reals");
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        if (!j[i].is_number())
            throw ParseError(std::string(what) + ": entry " + std::to_string(i) +
                             " is not a number");
        out[i] = j[i].get<double>();
    }
    return out;
}

double real(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    return j.get<double>();
}

} // namespace

nlohmann::json to_json(const Octonion& o) { return o.c; }

nlohmann::json to_json(const JordanElement& x) {
    return {{"algebra", algebra_name(x.alg)},
            {"diag", x.diag},
            {"x1", x.off[0].c},
            {"x2", x.off[1].c},
            {"x3", x.off[2].c}};
}

nlohmann::json to_json(const Generator& g) {
    return std::visit(
        [](const auto& gen) -> json {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, DeltaA>) {
                return {{"kind", "delta_a"},
                        {"algebra", algebra_name(gen.a().alg)},
                        {"a", gen.a().c}};
            } else if constexpr (std::is_same_v<T, RotO3>) {
                return {{"kind", "rot_o3"}, {"t", gen.t()}};
            } else if constexpr (std::is_same_v<T, SpThree>) {
                std::array<double, 36> flat;
                for (int k = 0; k < 9; ++k) {
                    const Quaternion& q = gen.a()[k];
                    flat[4 * k] = q.w;
                    flat[4 * k + 1] = q.x;
                    flat[4 * k + 2] = q.y;
                    flat[4 * k + 3] = q.z;
                }
                return {{"kind", "sp3"}, {"a", flat}};
            } else {
                return {{"kind", "g2"}, {"l", gen.l()}};
            }
        },
        g.payload());
}

nlohmann::json to_json(const DiagonalizationTranscript& t) {
    json steps = json::array();
    for (const Generator& g : t.steps) steps.push_back(to_json(g));
    return {{"input", to_json(t.input)},
            {"steps", steps},
            {"diagonal", t.diagonal},
            {"off_diag_residual", t.off_diag_residual},
            {"invariant_drift",
             {{"trace", t.invariant_drift.trace},
              {"inner", t.invariant_drift.inner},
              {"sigma", t.invariant_drift.sigma},
              {"det", t.invariant_drift.det}}}};
}

nlohmann::json to_json(const ObstructionVerdict& v) {
    return {{"inner_square", v.inner_square}, {"verdict", verdict_name(v.verdict)}};
}

Algebra algebra_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "compact") return Algebra::compact;
        if (s == "split") return Algebra::split;
    }
    throw ParseError("algebra: expected \"compact\" or \"split\"");
}

JordanElement jordan_from_json(const nlohmann::json& j) {
    require_object(j, {"algebra", "diag", "x1", "x2", "x3"}, "JordanElement");
    const Algebra alg = algebra_from_json(j["algebra"]);
    JordanElement x = JordanElement::zero(alg);
    x.diag = reals<3>(j["diag"], "diag");
    x.off[0] = Octonion(reals<8>(j["x1"], "x1"), alg);
    x.off[1] = Octonion(reals<8>(j["x2"], "x2"), alg);
    x.off[2] = Octonion(reals<8>(j["x3"], "x3"), alg);
    return x;
}

Generator generator_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("Generator: missing \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "delta_a") {
        require_object(j, {"kind", "algebra", "a"}, "delta_a");
        const Algebra alg = algebra_from_json(j["algebra"]);
        return DeltaA(Octonion(reals<8>(j["a"], "a"), alg));
    }
    if (kind == "rot_o3") {
        require_object(j, {"kind", "t"}, "rot_o3");
        return RotO3(reals<9>(j["t"], "t"));
    }
    if (kind == "sp3") {
        require_object(j, {"kind", "a"}, "sp3");
        const auto flat = reals<36>(j["a"], "a");
        std::array<Quaternion, 9> a;
        for (int k = 0; k < 9; ++k)
            a[k] = {flat[4 * k], flat[4 * k + 1], flat[4 * k + 2], flat[4 * k + 3]};
        return SpThree(a);
    }
    if (kind == "g2") {
        require_object(j, {"kind", "l"}, "g2");
        return GTwoAuto(reals<49>(j["l"], "l"));
    }
    throw ParseError("Generator: unknown kind \"" + kind + "\"");
}

DiagonalizationTranscript transcript_from_json(const nlohmann::json& j) {
    require_object(j, {"input", "steps", "diagonal", "off_diag_residual", "invariant_drift"},
                   "Transcript");
    DiagonalizationTranscript t;
    t.input = jordan_from_json(j["input"]);
    if (!j["steps"].is_array()) throw ParseError("Transcript: steps must be an array");
    for (const auto& s : j["steps"]) t.steps.push_back(generator_from_json(s));
    t.diagonal = reals<3>(j["diagonal"], "diagonal");
    t.off_diag_residual = real(j["off_diag_residual"], "off_diag_residual");
    const json& d = j["invariant_drift"];
    require_object(d, {"trace", "inner", "sigma", "det"}, "invariant_drift");
    t.invariant_drift = {real(d["trace"], "trace"), real(d["inner"], "inner"),
                         real(d["sigma"], "sigma"), real(d["det"], "det")};
    return t;
}

} // namespace albert
