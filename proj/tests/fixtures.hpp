#ifndef EIDEAL_TESTS_FIXTURES_HPP
#define EIDEAL_TESTS_FIXTURES_HPP

#include "eideal/graph.hpp"

#include <filesystem>
#include <string>

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(EIDEAL_FIXTURE_DIR) / name;
}

inline eideal::Graph fixture(const std::string& name) { return eideal::read_graph_file(fixture_path(name)); }

#endif // EIDEAL_TESTS_FIXTURES_HPP
