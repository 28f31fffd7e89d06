#ifndef HOCM_VERSION_HPP
#define HOCM_VERSION_HPP

namespace hocm {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
