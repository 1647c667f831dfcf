// Built-in optical-ground-station city table and CSV loader.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "leoqnet/earthgeo.hpp"

namespace leoqnet {

struct City {
    std::string name;
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

/// The embedded city table (public geographic coordinates, 2-decimal degrees).
const std::vector<City>& builtin_cities();

/// Parse a city table in `name,lat_deg,lon_deg` CSV form (header row required).
std::vector<City> parse_cities_csv(std::string_view csv, std::string_view origin = "<string>");

/// Load a city table from a CSV file with the same schema.
std::vector<City> load_cities_csv(const std::filesystem::path& path);

/// Look up a city by exact name and return it as a sea-level ground station.
/// Throws std::invalid_argument when the name is unknown.
GeodeticPoint find_city(std::string_view name, const std::vector<City>& cities = builtin_cities());

} // namespace leoqnet
