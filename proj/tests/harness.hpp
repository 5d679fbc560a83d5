#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace testing {

struct TestCase {
  const char* name;
  std::function<void()> run;
};

inline std::vector<TestCase>& registry() {
  static std::vector<TestCase> tests;
  return tests;
}

struct Registrar {
  Registrar(const char* name, std::function<void()> fn) { registry().push_back({name, fn}); }
};

inline int g_failures = 0;
inline const char* g_current = "";

inline void report_failure(const char* file, int line, const std::string& what) {
  std::printf("    FAIL %s:%d  [%s] %s\n", file, line, g_current, what.c_str());
  ++g_failures;
}

#define TEST(name)                                                 \
  static void test_fn_##name();                                    \
  static const ::testing::Registrar reg_##name(#name, test_fn_##name); \
  static void test_fn_##name()

#define CHECK(cond)                                                       \
  do {                                                                    \
    if (!(cond)) ::testing::report_failure(__FILE__, __LINE__, #cond);    \
  } while (0)

#define CHECK_MSG(cond, ...)                                              \
  do {                                                                    \
    if (!(cond)) {                                                        \
      char buf_[256];                                                     \
      std::snprintf(buf_, sizeof buf_, __VA_ARGS__);                      \
      ::testing::report_failure(__FILE__, __LINE__, buf_);                \
    }                                                                     \
  } while (0)

#define CHECK_NEAR(a, b, tol)                                                          \
  do {                                                                                 \
    const double va_ = (a), vb_ = (b), vt_ = (tol);                                    \
    if (!(std::abs(va_ - vb_) <= vt_))                                                 \
      ::testing::report_failure(__FILE__, __LINE__,                                    \
                                std::string(#a " vs " #b ": ") + std::to_string(va_) + \
                                    " != " + std::to_string(vb_));                     \
  } while (0)

#define CHECK_REL(a, b, tol)                                                              \
  do {                                                                                    \
    const double va_ = (a), vb_ = (b), vt_ = (tol);                                       \
    const double scale_ = std::max(std::abs(va_), std::abs(vb_));                         \
    if (!(std::abs(va_ - vb_) <= vt_ * scale_))                                           \
      ::testing::report_failure(                                                         \
          __FILE__, __LINE__,                                                             \
          std::string(#a " !~ " #b ": ") + std::to_string(va_) + " vs " +                 \
              std::to_string(vb_) + " (rel " +                                            \
              std::to_string(scale_ > 0 ? std::abs(va_ - vb_) / scale_ : 0.0) + ")");     \
  } while (0)

#define CHECK_THROWS(expected_, expr)                                                    \
  do {                                                                                   \
    bool caught_ = false;                                                                \
    try {                                                                                \
      (void)(expr);                                                                      \
    } catch (const geostat::Error& e_) {                                                 \
      caught_ = e_.code() == (expected_);                                                \
      if (!caught_)                                                                      \
        ::testing::report_failure(__FILE__, __LINE__,                                    \
                                  std::string("wrong error code: ") + e_.what());        \
    }                                                                                    \
    if (!caught_) ::testing::report_failure(__FILE__, __LINE__, "expected " #expected_); \
  } while (0)

inline int run_all(const char* suite) {
  std::printf("== %s ==\n", suite);
  int ran = 0;
  for (const auto& t : registry()) {
    g_current = t.name;
    const int before = g_failures;
    try {
      t.run();
    } catch (const std::exception& e) {
      report_failure("(uncaught)", 0, e.what());
    }
    ++ran;
    std::printf("  %-52s %s\n", t.name, g_failures == before ? "ok" : "FAILED");
  }
  std::printf("%d tests, %d failures\n", ran, g_failures);
  return g_failures == 0 ? 0 : 1;
}

}  // namespace testing
