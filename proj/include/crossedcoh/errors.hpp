#pragma once

#include <stdexcept>
#include <string>

namespace ccoh {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_a_group : error { using error::error; };
struct not_an_action : error { using error::error; };
struct bound_exceeded : error { using error::error; };
struct not_surjective : error { using error::error; };
struct kernel_not_central : error { using error::error; };
struct not_a_cocycle : error { using error::error; };
struct non_normal_image : error { using error::error; };
struct not_exact : error { using error::error; };
struct not_fixed : error { using error::error; };
struct schema_error : error { using error::error; };
struct unknown_scenario : error { using error::error; };

}  // namespace ccoh
