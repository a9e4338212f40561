#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pkern/kernel.hpp"

namespace pkern {

// A checked-in kernel together with its published profile and exponent.
// family is "best_exponent" or "low_complexity".
struct NamedKernel {
    std::string name;
    int l = 0;
    std::string family;
    Kernel kernel;
    PDProfile published_pdp;
    double published_exponent = 0;
};

// PKERN_DATA_DIR environment variable, falling back to the build-time path.
std::string default_data_dir();

// FNV-1a over the canonical matrix text (rows joined by newlines).
std::uint64_t content_checksum(const std::string& data);

// Names listed in the catalog file, in file order.
std::vector<std::string> catalog(const std::string& dir = "");

// Loads one kernel, checking its content checksum against the catalog.
NamedKernel load_named_kernel(const std::string& name, const std::string& dir = "");

std::vector<NamedKernel> load_all(const std::string& dir = "");

}  // namespace pkern
