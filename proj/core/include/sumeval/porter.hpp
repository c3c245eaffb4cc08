#pragma once

#include <string>
#include <string_view>

namespace sumeval {

// Classic Porter suffix-stripping stemmer (all five steps). Expects a
// lowercase token; words of length <= 2 are returned unchanged, following
// the conventional guard every mainstream implementation applies.
std::string porter_stem(std::string_view token);

}  // namespace sumeval
