// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lrpk/lrpk.h"

#include <chrono>
#include <exception>
#include <new>
#include <string>

#include "lrpk/json_io.hpp"
#include "lrpk/verify.hpp"

struct lrpk_session {
  lrpk::Limits limits = lrpk::Limits::from_env();
  std::string output;
  std::string error;
};

namespace {

using lrpk::io::json;

// Runs body, mapping exceptions onto status codes.  body returns the output
// document and sets `violation` when a checked identity fails.
template <class Body>
lrpk_status guarded(lrpk_session* s, Body&& body) {
  if (s == nullptr) return LRPK_BAD_HANDLE;
  s->output.clear();
  s->error.clear();
  try {
    bool violation = false;
    json out = body(violation);
    s->output = lrpk::io::dump(out);
    return violation ? LRPK_VIOLATION : LRPK_OK;
  } catch (const lrpk::InvalidInput& e) {
    s->error = e.what();
    return LRPK_INVALID_INPUT;
  } catch (const lrpk::BoundExceeded& e) {
    s->error = e.what();
    return LRPK_BOUND_EXCEEDED;
  } catch (const lrpk::InternalError& e) {
    s->error = e.what();
    return LRPK_INTERNAL;
  } catch (const json::exception& e) {
    s->error = std::string("bad JSON value: ") + e.what();
    return LRPK_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    s->error = "out of memory";
    return LRPK_INTERNAL;
  } catch (const std::exception& e) {
    s->error = e.what();
    return LRPK_INTERNAL;
  }
}

json parse_arg(const char* text, const char* what) {
  if (text == nullptr) throw lrpk::InvalidInput(std::string("missing ") + what);
  return lrpk::io::parse(text);
}

}  // namespace

extern "C" {

const char* lrpk_version(void) { return "1.0.0"; }

const char* lrpk_status_name(lrpk_status status) {
  switch (status) {
    case LRPK_OK: return "ok";
    case LRPK_VIOLATION: return "violation";
    case LRPK_INVALID_INPUT: return "invalid-input";
    case LRPK_BOUND_EXCEEDED: return "bound-exceeded";
    case LRPK_INTERNAL: return "internal-error";
    case LRPK_BAD_HANDLE: return "bad-handle";
  }
  return "unknown";
}

lrpk_session* lrpk_session_new(void) { return new (std::nothrow) lrpk_session(); }

void lrpk_session_free(lrpk_session* s) { delete s; }

lrpk_status lrpk_set_limits(lrpk_session* s, int ssyt_cells, int picture_cells, int bfs_length) {
  if (s == nullptr) return LRPK_BAD_HANDLE;
  if (ssyt_cells <= 0 || picture_cells <= 0 || bfs_length <= 0) {
    s->error = "limits must be positive";
    return LRPK_INVALID_INPUT;
  }
  s->limits = {ssyt_cells, picture_cells, bfs_length};
  return LRPK_OK;
}

const char* lrpk_output(const lrpk_session* s) { return s ? s->output.c_str() : ""; }

const char* lrpk_last_error(const lrpk_session* s) { return s ? s->error.c_str() : "null session"; }

lrpk_status lrpk_pictures(lrpk_session* s, const char* kappa1_json, const char* kappa2_json, int count_only) {
  return guarded(s, [&](bool&) {
    const auto k1 = lrpk::io::skew_shape_from(parse_arg(kappa1_json, "kappa1"));
    const auto k2 = lrpk::io::skew_shape_from(parse_arg(kappa2_json, "kappa2"));
    if (count_only) return json{{"count", lrpk::count_pictures(k1, k2, s->limits)}};
    json list = json::array();
    for (const auto& p : lrpk::enumerate_pictures(k1, k2, s->limits)) list.push_back(lrpk::io::to_json(p));
    return json{{"count", list.size()}, {"pictures", list}};
  });
}

lrpk_status lrpk_to_pair(lrpk_session* s, const char* picture_json) {
  return guarded(s, [&](bool&) {
    const auto p = lrpk::io::picture_from(parse_arg(picture_json, "picture"));
    const lrpk::CorrespondenceContext ctx(p.domain, p.codomain);
    return json{{"context", lrpk::io::to_json(ctx)}, {"pair", lrpk::io::to_json(lrpk::full_s(ctx, p))}};
  });
}

lrpk_status lrpk_to_picture(lrpk_session* s, const char* context_pair_json) {
  return guarded(s, [&](bool&) {
    const json doc = parse_arg(context_pair_json, "context/pair document");
    if (!doc.is_object() || !doc.contains("context") || !doc.contains("pair"))
      throw lrpk::InvalidInput("expected {\"context\":{...},\"pair\":{...}}");
    const auto ctx = lrpk::io::context_from(doc["context"]);
    return lrpk::io::to_json(lrpk::full_c(ctx, lrpk::io::crystal_pair_from(doc["pair"])));
  });
}

lrpk_status lrpk_lr_coefficient(lrpk_session* s, const char* lambda_json, const char* mu_json, const char* nu_json,
                                int cross_check) {
  return guarded(s, [&](bool& violation) {
    const auto lambda = lrpk::io::partition_from(parse_arg(lambda_json, "lambda"));
    const auto mu = lrpk::io::partition_from(parse_arg(mu_json, "mu"));
    const auto nu = lrpk::io::partition_from(parse_arg(nu_json, "nu"));
    const auto r = lrpk::lr_coefficient(lambda, mu, nu, cross_check != 0, s->limits);
    json out{{"coefficient", r.coefficient}};
    if (cross_check) {
      out["pictures"] = *r.pictures;
      out["skew_tableaux"] = *r.skew_tableaux;
      out["routes_agree"] = r.routes_agree;
      violation = !r.routes_agree;
    }
    return out;
  });
}

lrpk_status lrpk_rsk(lrpk_session* s, const char* array_json) {
  return guarded(s, [&](bool&) {
    return lrpk::io::to_json(lrpk::rsk_forward(lrpk::io::array_from(parse_arg(array_json, "two-rowed array"))));
  });
}

lrpk_status lrpk_unrsk(lrpk_session* s, const char* pq_json) {
  return guarded(s, [&](bool&) {
    const auto pq = lrpk::io::rsk_pair_from(parse_arg(pq_json, "tableau pair"));
    return lrpk::io::to_json(lrpk::rsk_inverse(pq.P, pq.Q));
  });
}

lrpk_status lrpk_lr_membership(lrpk_session* s, const char* tableau_json, const char* lambda_json, const char* nu_json,
                               int rank) {
  return guarded(s, [&](bool&) {
    const auto t = lrpk::io::tableau_from(parse_arg(tableau_json, "tableau"));
    const auto lambda = lrpk::io::partition_from(parse_arg(lambda_json, "lambda"));
    const auto nu = lrpk::io::partition_from(parse_arg(nu_json, "nu"));
    const int n = rank > 0 ? rank : lrpk::default_lr_rank(lambda, t.shape().outer(), nu);
    return lrpk::io::to_json(lrpk::lr_membership(t, lambda, nu, n));
  });
}

lrpk_status lrpk_verify(lrpk_session* s, const char* suite, uint64_t seed, int size_bound, int instances,
                        int with_timing) {
  return guarded(s, [&](bool& violation) {
    if (suite == nullptr) throw lrpk::InvalidInput("missing suite name");
    const std::string name = suite;
    lrpk::verify::Options opts;
    opts.seed = seed;
    opts.limits = s->limits;
    if (size_bound > 0) {
      opts.max_cells = size_bound;
      opts.word_length = size_bound;
      opts.highest_cells = size_bound;
      opts.random_cells = size_bound;
    }
    if (instances > 0) opts.instances = instances;
    const auto start = std::chrono::steady_clock::now();
    auto r = lrpk::verify::run_suite(name, opts);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    violation = !r.ok;
    json out{{"suite", r.suite}, {"status", r.ok ? "ok" : "violation"}, {"payload", std::move(r.payload)}};
    if (with_timing) out["elapsed_ms"] = ms;
    return out;
  });
}

}  // extern "C"
