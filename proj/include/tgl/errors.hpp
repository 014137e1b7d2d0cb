#pragma once

#include <stdexcept>
#include <string>

namespace tgl {

// Instance size exceeds a solver or oracle cap; callers may retry with an
// explicit higher cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, int size, int cap)
        : std::runtime_error(what + ": size " + std::to_string(size) +
                             " exceeds cap " + std::to_string(cap)),
          size_(size),
          cap_(cap) {}
    int size() const { return size_; }
    int cap() const { return cap_; }

private:
    int size_;
    int cap_;
};

}  // namespace tgl
