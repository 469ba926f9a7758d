#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "strlink/error.hpp"

namespace strlink::test {

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Inconsistent;
}

}  // namespace strlink::test
