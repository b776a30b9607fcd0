#include "accsim/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "accsim/errors.hpp"
#include "accsim/subset.hpp"

namespace accsim {

std::string to_string(SizeMode m) {
    return m == SizeMode::ExpectedSize ? "expected-size" : "sampled-bit";
}

SizeMode parse_size_mode(const std::string& s) {
    if (s == "expected-size" || s == "expected") return SizeMode::ExpectedSize;
    if (s == "sampled-bit" || s == "sampled") return SizeMode::SampledBit;
    throw ValidationError("mode must be \"expected-size\" or \"sampled-bit\", got \"" + s + "\"");
}

void Config::validate() const {
    if (K < 1 || K > kMaxFaps) {
        throw ValidationError("K must be in 1.." + std::to_string(kMaxFaps) +
                              ", got " + std::to_string(K));
    }
    if (N < K) {
        throw ValidationError("N must be >= K (worst-case demands need distinct files), got N=" +
                              std::to_string(N) + " K=" + std::to_string(K));
    }
    if (M < 1 || M >= N) {
        throw ValidationError("M must satisfy 0 < M < N, got M=" + std::to_string(M) +
                              " N=" + std::to_string(N));
    }
    if (F < 1) throw ValidationError("F must be positive, got " + std::to_string(F));
    if (B < 2) throw ValidationError("B must be >= 2, got " + std::to_string(B));
    if (delta_b < 1 || delta_b > B) {
        throw ValidationError("delta_b must be in 1..B, got delta_b=" + std::to_string(delta_b) +
                              " B=" + std::to_string(B));
    }
}

namespace {

using nlohmann::json;

// Pulls a required integral field, rejecting non-integers.
template <typename T>
T get_int_field(const json& j, const char* name) {
    if (!j.contains(name)) throw ValidationError(std::string("config: missing field \"") + name + "\"");
    const json& v = j.at(name);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ValidationError(std::string("config: field \"") + name + "\" must be an integer");
    }
    return v.get<T>();
}

}  // namespace

Config Config::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: top-level JSON must be an object");

    static const std::set<std::string> known = {"K", "N", "M", "F", "B", "delta_b", "T", "mode", "seed"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) throw ValidationError("config: unknown field \"" + key + "\"");
    }

    Config cfg;
    cfg.K = get_int_field<int>(j, "K");
    cfg.N = get_int_field<int>(j, "N");
    cfg.M = get_int_field<int>(j, "M");
    cfg.F = get_int_field<std::int64_t>(j, "F");
    cfg.B = get_int_field<int>(j, "B");
    cfg.delta_b = get_int_field<int>(j, "delta_b");
    if (j.contains("T")) {
        if (!j.at("T").is_number()) throw ValidationError("config: field \"T\" must be a number");
        cfg.T = j.at("T").get<double>();
    }
    if (j.contains("mode")) {
        if (!j.at("mode").is_string()) throw ValidationError("config: field \"mode\" must be a string");
        cfg.mode = parse_size_mode(j.at("mode").get<std::string>());
    }
    if (j.contains("seed")) cfg.seed = get_int_field<std::uint64_t>(j, "seed");

    cfg.validate();
    return cfg;
}

Config Config::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Config::to_json_text() const {
    json j;
    j["K"] = K;
    j["N"] = N;
    j["M"] = M;
    j["F"] = F;
    j["B"] = B;
    j["delta_b"] = delta_b;
    j["T"] = T;
    j["mode"] = to_string(mode);
    j["seed"] = seed;
    return j.dump(2);
}

}  // namespace accsim
