#include "leoqnet/cities.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "leoqnet/cities_data.inc"

namespace leoqnet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view field, std::string_view origin, std::size_t line_no) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument(std::string(origin) + ":" + std::to_string(line_no) +
                                    ": bad numeric field '" + std::string(field) + "'");
    }
    return value;
}

} // namespace

std::vector<City> parse_cities_csv(std::string_view csv, std::string_view origin) {
    std::vector<City> cities;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t eol = csv.find('\n', pos);
        std::string_view line = csv.substr(pos, eol == std::string_view::npos ? csv.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? csv.size() + 1 : eol + 1;
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "name,lat_deg,lon_deg") {
                throw std::invalid_argument(std::string(origin) +
                                            ": expected header 'name,lat_deg,lon_deg', got '" +
                                            std::string(line) + "'");
            }
            continue;
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = (c1 == std::string_view::npos) ? std::string_view::npos : line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw std::invalid_argument(std::string(origin) + ":" + std::to_string(line_no) +
                                        ": expected 3 comma-separated fields");
        }
        City city;
        city.name = std::string(trim(line.substr(0, c1)));
        city.lat_deg = parse_double(line.substr(c1 + 1, c2 - c1 - 1), origin, line_no);
        city.lon_deg = parse_double(line.substr(c2 + 1), origin, line_no);
        if (city.name.empty()) {
            throw std::invalid_argument(std::string(origin) + ":" + std::to_string(line_no) +
                                        ": empty city name");
        }
        GeodeticPoint{city.lat_deg, city.lon_deg, 0.0}.validate();
        cities.push_back(std::move(city));
    }
    return cities;
}

std::vector<City> load_cities_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open city table: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cities_csv(buf.str(), path.string());
}

const std::vector<City>& builtin_cities() {
    static const std::vector<City> cities = parse_cities_csv(kBuiltinCitiesCsv, "<builtin>");
    return cities;
}

GeodeticPoint find_city(std::string_view name, const std::vector<City>& cities) {
    for (const City& city : cities) {
        if (city.name == name) {
            return GeodeticPoint{city.lat_deg, city.lon_deg, 0.0};
        }
    }
    std::string known;
    for (const City& city : cities) {
        known += known.empty() ? city.name : ", " + city.name;
    }
    throw std::invalid_argument("unknown city '" + std::string(name) + "' (known: " + known + ")");
}

} // namespace leoqnet
