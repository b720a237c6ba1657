#pragma once

// File formats and run provenance. Set files: one point per line as
// comma-separated integers, '#' starts a comment, dimension fixed by the
// first point. Dilate files: the same with the weight appended as the last
// field. Manifests: JSON records of what a CLI invocation read, wrote and
// produced.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dilatelab/fractional.hpp"
#include "dilatelab/int_set.hpp"

namespace dilatelab {

std::string_view version();  // library + CLI version string

IntSet read_set(const std::string& path);
void write_set(const IntSet& S, const std::string& path);

FractionalDilate read_dilate(const std::string& path);
void write_dilate(const FractionalDilate& gamma, const std::string& path);

// Shortest representation with 12 significant digits ("%.12g").
std::string format_g12(double value);

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::string& path);  // throws on open failure

struct RunManifest {
    std::string command;  // argv joined with spaces
    std::string version;
    std::uint64_t seed = 0;
    bool seed_used = false;
    std::vector<std::pair<std::string, std::string>> input_digests;  // path, hex
    std::vector<std::string> outputs;  // files written
    double wall_seconds = 0.0;
};

std::string manifest_to_json(const RunManifest& m);  // serialized, indented

std::string hex_digest(std::uint64_t value);  // 16 lowercase hex digits

}  // namespace dilatelab
