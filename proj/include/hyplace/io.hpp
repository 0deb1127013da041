#pragma once

#include <string>

namespace hyplace::io {

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// HYPLACE_THREADS, clamped to [1, hardware]; 0 means unset (default 1).
int thread_cap();

}  // namespace hyplace::io
