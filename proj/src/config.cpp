#include "phoenix/cli.hpp"

#include <fstream>
#include <sstream>

namespace phoenix {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value);

template <>
int parse_number<int>(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw Error("config: key '" + key + "' needs an integer, got '" + value + "'");
    }
}

template <>
double parse_number<double>(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw Error("config: key '" + key + "' needs a number, got '" + value + "'");
    }
}

template <>
uint64_t parse_number<uint64_t>(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw Error("config: key '" + key + "' needs an unsigned integer, got '" + value + "'");
    }
}

}  // namespace

TrainConfig TrainConfig::parse(std::istream& in) {
    TrainConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("config: line " + std::to_string(line_no) + " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw Error("config: line " + std::to_string(line_no) + " has no key");

        if (key == "population_size") config.mnc.population_size = parse_number<int>(key, value);
        else if (key == "cs") config.mnc.cs = parse_number<int>(key, value);
        else if (key == "cf") config.mnc.cf = parse_number<int>(key, value);
        else if (key == "group_size") config.mnc.group_size = parse_number<int>(key, value);
        else if (key == "crossover_rate") config.mnc.crossover_rate = parse_number<double>(key, value);
        else if (key == "mutation_rate") config.mnc.mutation_rate = parse_number<double>(key, value);
        else if (key == "mutation_sigma") config.mnc.mutation_sigma = parse_number<double>(key, value);
        else if (key == "max_generations") config.mnc.max_generations = parse_number<int>(key, value);
        else if (key == "stale_best_generations")
            config.mnc.stale_best_generations = parse_number<int>(key, value);
        else if (key == "low_change_generations")
            config.mnc.low_change_generations = parse_number<int>(key, value);
        else if (key == "low_change_threshold")
            config.mnc.low_change_threshold = parse_number<double>(key, value);
        else if (key == "rng_seed") config.mnc.rng_seed = parse_number<uint64_t>(key, value);
        else if (key == "scheme") config.scheme = value;
        else if (key == "min_games") config.min_games = parse_number<int>(key, value);
        else if (key == "search_depth") config.search_depth = parse_number<int>(key, value);
        else if (key == "openings") config.openings = value;
        else if (key == "store_path") config.store_path = value;
        else if (key == "metrics_path") config.metrics_path = value;
        else if (key == "top_k") config.top_k = parse_number<int>(key, value);
        else throw Error("config: unknown key '" + key + "'");
    }
    return config;
}

TrainConfig TrainConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open '" + path + "'");
    return parse(in);
}

std::string TrainConfig::dump() const {
    std::ostringstream out;
    out << "population_size = " << mnc.population_size << '\n';
    out << "cs = " << mnc.cs << '\n';
    out << "cf = " << mnc.cf << '\n';
    out << "group_size = " << mnc.group_size << '\n';
    out << "crossover_rate = " << mnc.crossover_rate << '\n';
    out << "mutation_rate = " << mnc.mutation_rate << '\n';
    out << "mutation_sigma = " << mnc.mutation_sigma << '\n';
    out << "max_generations = " << mnc.max_generations << '\n';
    out << "stale_best_generations = " << mnc.stale_best_generations << '\n';
    out << "low_change_generations = " << mnc.low_change_generations << '\n';
    out << "low_change_threshold = " << mnc.low_change_threshold << '\n';
    out << "rng_seed = " << mnc.rng_seed << '\n';
    out << "scheme = " << scheme << '\n';
    out << "min_games = " << min_games << '\n';
    out << "search_depth = " << search_depth << '\n';
    out << "openings = " << openings << '\n';
    out << "store_path = " << store_path << '\n';
    out << "metrics_path = " << metrics_path << '\n';
    out << "top_k = " << top_k << '\n';
    return out.str();
}

void TrainConfig::validate() const {
    mnc.validate();
    if (scheme != "random" && scheme != "roundrobin")
        throw Error("config: key 'scheme' must be 'random' or 'roundrobin'");
    if (min_games < 1) throw Error("config: key 'min_games' must be >= 1");
    if (search_depth < 1) throw Error("config: key 'search_depth' must be >= 1");
    if (openings != "builtin" && openings != "startpos")
        throw Error("config: key 'openings' must be 'builtin' or 'startpos'");
    if (top_k < 1) throw Error("config: key 'top_k' must be >= 1");
    if (store_path.empty()) throw Error("config: key 'store_path' must not be empty");
    if (metrics_path.empty()) throw Error("config: key 'metrics_path' must not be empty");
    if (store_path == metrics_path)
        throw Error("config: 'store_path' and 'metrics_path' must differ");
}

}  // namespace phoenix
