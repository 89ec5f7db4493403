#pragma once

#include <optional>
#include <string>

#include "bruhat/bracket_table.hpp"

namespace bruhat {

std::string sha256_hex(const std::string& data);

// Content-addressed bracket-table cache: <dir>/brackets/<sha256(key)>.json.
// Loads validate Jacobi and weight homogeneity; corrupt entries are dropped.
std::optional<BracketTable> cache_load_table(const std::string& dir, const std::string& key);
void cache_store_table(const std::string& dir, const std::string& key, const BracketTable& bt);

// --cache-dir fallback: BRUHAT_FLOWS_CACHE env var.
std::string effective_cache_dir(const std::string& flag_value);

}  // namespace bruhat
