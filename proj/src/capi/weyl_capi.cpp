#include "weyl/weyl.h"

#include <string>

#include "core/engine.hpp"
#include "core/sparse.hpp"

using weyl::engine::Options;
using weyl::engine::Report;

struct weyl_options {
  Options opts;
};

struct weyl_report {
  Report report;
  std::string json_text;
};

namespace {

thread_local std::string g_last_error;

weyl_status fail(weyl_status code, const char* what) {
  g_last_error = what;
  return code;
}

// runs a computation, mapping exceptions onto status codes
template <class Fn>
weyl_status guarded(weyl_report** out, Fn&& fn) {
  if (out == nullptr) return fail(WEYL_ERR_USAGE, "output report pointer is null");
  *out = nullptr;
  try {
    Report r = fn();
    auto* rep = new weyl_report{std::move(r), {}};
    rep->json_text = rep->report.payload.dump(2);
    *out = rep;
    return WEYL_OK;
  } catch (const weyl::UsageError& e) {
    return fail(WEYL_ERR_USAGE, e.what());
  } catch (const weyl::UnsupportedError& e) {
    return fail(WEYL_ERR_UNSUPPORTED, e.what());
  } catch (const weyl::ResourceCapError& e) {
    return fail(WEYL_ERR_RESOURCE, e.what());
  } catch (const std::exception& e) {
    return fail(WEYL_ERR_INTERNAL, e.what());
  }
}

Options effective(const weyl_options* opts) { return opts ? opts->opts : Options{}; }

}  // namespace

extern "C" {

unsigned weyl_abi_version(void) { return 1; }

weyl_options* weyl_options_new(void) { return new weyl_options{}; }

void weyl_options_free(weyl_options* opts) { delete opts; }

weyl_status weyl_options_set_primes(weyl_options* opts, uint64_t p1, uint64_t p2) {
  if (opts == nullptr) return fail(WEYL_ERR_USAGE, "options pointer is null");
  if (!weyl::exactla::is_prime(p1) || !weyl::exactla::is_prime(p2) || p1 == p2)
    return fail(WEYL_ERR_USAGE, "need two distinct primes");
  opts->opts.p1 = p1;
  opts->opts.p2 = p2;
  return WEYL_OK;
}

weyl_status weyl_options_set_exact(weyl_options* opts, int exact) {
  if (opts == nullptr) return fail(WEYL_ERR_USAGE, "options pointer is null");
  opts->opts.exact = exact != 0;
  return WEYL_OK;
}

weyl_status weyl_options_set_max_total_degree(weyl_options* opts, int cap) {
  if (opts == nullptr || cap < 0) return fail(WEYL_ERR_USAGE, "cap must be nonnegative");
  opts->opts.max_total_degree = cap;
  return WEYL_OK;
}

weyl_status weyl_options_set_truncation(weyl_options* opts, int n) {
  if (opts == nullptr || n < 0) return fail(WEYL_ERR_USAGE, "truncation must be nonnegative");
  opts->opts.truncation = n;
  return WEYL_OK;
}

weyl_status weyl_character_origin(int n, int d, int r, const weyl_options* opts,
                                  weyl_report** out) {
  return guarded(out, [&] { return weyl::engine::character_origin(n, d, r, effective(opts)); });
}

weyl_status weyl_character_points(const long long* num, const long long* den, size_t npoints,
                                  int r, const weyl_options* opts, weyl_report** out) {
  if (npoints > 0 && (num == nullptr || den == nullptr))
    return fail(WEYL_ERR_USAGE, "point arrays are null");
  return guarded(out, [&] {
    std::vector<weyl::Rat> zs;
    zs.reserve(npoints);
    for (size_t i = 0; i < npoints; ++i)
      zs.push_back(weyl::make_rat(static_cast<long>(num[i]), static_cast<long>(den[i])));
    return weyl::engine::character_points(zs, r, effective(opts));
  });
}

weyl_status weyl_verify(const char* suite, int n, int d, int r, int m,
                        const weyl_options* opts, weyl_report** out) {
  if (suite == nullptr) return fail(WEYL_ERR_USAGE, "suite name is null");
  return guarded(out, [&] {
    weyl::engine::VerifyParams params{n, d, r, m};
    return weyl::engine::verify(suite, params, effective(opts));
  });
}

weyl_status weyl_table(const char* kind, int n, int d, int r, const weyl_options* opts,
                       weyl_report** out) {
  if (kind == nullptr) return fail(WEYL_ERR_USAGE, "table kind is null");
  return guarded(out, [&] {
    weyl::engine::VerifyParams params{n, d, r, -1};
    return weyl::engine::table(kind, params, effective(opts));
  });
}

const char* weyl_report_json(const weyl_report* report) {
  return report ? report->json_text.c_str() : "";
}

int weyl_report_passed(const weyl_report* report) {
  return report && report->report.passed ? 1 : 0;
}

void weyl_report_free(weyl_report* report) { delete report; }

const char* weyl_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
