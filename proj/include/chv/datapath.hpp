// Data directory resolution: CHV_DATA overrides the build-time default.
#pragma once

#include <cstdlib>
#include <string>

namespace chv {

inline std::string data_dir() {
  if (const char* env = std::getenv("CHV_DATA")) return env;
#ifdef CHV_DEFAULT_DATA_DIR
  return CHV_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

}  // namespace chv
