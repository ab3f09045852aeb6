#pragma once

namespace fairaug {

const char* version();

}  // namespace fairaug
