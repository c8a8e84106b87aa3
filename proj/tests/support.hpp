#pragma once

#include <string>

#include "normrig/document.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(NORMRIG_FIXTURE_DIR) + "/" + name + ".json";
}

inline normrig::AnalysisDocument fixture(const std::string& name) {
  return normrig::load_document(fixture_path(name));
}

inline normrig::Vector vec(std::initializer_list<const char*> xs) {
  normrig::Vector v;
  for (auto x : xs) v.push_back(normrig::Real::parse(x));
  return v;
}

}  // namespace testsupport
