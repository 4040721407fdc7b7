// Copyright 2026 The sato2d Authors
//
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

#include "sato2d/sato2d.h"

#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"
#include "errors.hpp"
#include "parser.hpp"

struct sato2d_session {
  sato2d::Session s;
};

struct sato2d_op {
  sato2d::EOp p;
  sato2d::Field field;
};

struct sato2d_report {
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

sato2d_status fail(sato2d_status st, const char *msg) {
  g_last_error = msg;
  return st;
}

template <class F> sato2d_status guarded(F &&f) {
  using namespace sato2d;
  try {
    f();
    g_last_error.clear();
    return SATO2D_OK;
  } catch (const UsageError &e) {
    return fail(SATO2D_E_USAGE, e.what());
  } catch (const ParseError &e) {
    return fail(SATO2D_E_PARSE, e.what());
  } catch (const ConfigError &e) {
    return fail(SATO2D_E_CONFIG, e.what());
  } catch (const DivisionByZero &e) {
    return fail(SATO2D_E_DIVISION_BY_ZERO, e.what());
  } catch (const PrecisionError &e) {
    return fail(SATO2D_E_PRECISION, e.what());
  } catch (const NonUnitError &e) {
    return fail(SATO2D_E_NON_UNIT, e.what());
  } catch (const IndeterminateError &e) {
    return fail(SATO2D_E_INDETERMINATE, e.what());
  } catch (const ConstructionError &e) {
    return fail(SATO2D_E_CONSTRUCTION, e.what());
  } catch (const InternalError &e) {
    return fail(SATO2D_E_INTERNAL, e.what());
  } catch (const DomainError &e) {
    return fail(SATO2D_E_DOMAIN, e.what());
  } catch (const std::bad_alloc &) {
    return fail(SATO2D_E_UNKNOWN, "out of memory");
  } catch (const std::exception &e) {
    return fail(SATO2D_E_UNKNOWN, e.what());
  }
}

#define SATO2D_REQUIRE(p)                                                                          \
  do {                                                                                             \
    if (!(p))                                                                                      \
      return fail(SATO2D_E_NULL_ARGUMENT, "null argument: " #p);                                   \
  } while (0)

} // namespace

extern "C" {

const char *sato2d_last_error(void) { return g_last_error.c_str(); }

const char *sato2d_status_name(sato2d_status s) {
  switch (s) {
  case SATO2D_OK:
    return "ok";
  case SATO2D_E_USAGE:
    return "usage error";
  case SATO2D_E_PARSE:
    return "parse error";
  case SATO2D_E_CONFIG:
    return "configuration error";
  case SATO2D_E_DOMAIN:
    return "domain error";
  case SATO2D_E_DIVISION_BY_ZERO:
    return "division by zero";
  case SATO2D_E_PRECISION:
    return "precision error";
  case SATO2D_E_NON_UNIT:
    return "non-unit";
  case SATO2D_E_INDETERMINATE:
    return "indeterminate";
  case SATO2D_E_CONSTRUCTION:
    return "construction error";
  case SATO2D_E_INTERNAL:
    return "internal error";
  case SATO2D_E_NULL_ARGUMENT:
    return "null argument";
  default:
    return "unknown error";
  }
}

int sato2d_exit_code(sato2d_status s) {
  switch (s) {
  case SATO2D_OK:
    return 0;
  case SATO2D_E_USAGE:
  case SATO2D_E_CONFIG:
  case SATO2D_E_NULL_ARGUMENT:
    return 2;
  default:
    return 1;
  }
}

sato2d_status sato2d_session_new(const char *field, int nx, int n1, int s_min, int s_max,
                                 sato2d_session **out) {
  SATO2D_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    sato2d::Session s;
    s.field = sato2d::Field::parse(field ? field : "Q");
    s.trunc = sato2d::Trunc{nx, n1, s_min, s_max};
    s.trunc.validate();
    *out = new sato2d_session{std::move(s)};
  });
}

sato2d_status sato2d_session_set_bound(sato2d_session *s, int bound) {
  SATO2D_REQUIRE(s);
  if (bound < 0)
    return fail(SATO2D_E_CONFIG, "degree bound must be nonnegative");
  s->s.bound = bound;
  return SATO2D_OK;
}

sato2d_status sato2d_session_set_seed(sato2d_session *s, uint64_t seed) {
  SATO2D_REQUIRE(s);
  s->s.seed = seed;
  return SATO2D_OK;
}

void sato2d_session_free(sato2d_session *s) { delete s; }

sato2d_status sato2d_op_parse(const sato2d_session *s, const char *text, sato2d_op **out) {
  SATO2D_REQUIRE(s);
  SATO2D_REQUIRE(text);
  SATO2D_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new sato2d_op{sato2d::parse_op(text, s->s.trunc, s->s.field), s->s.field};
  });
}

sato2d_status sato2d_op_compose(const sato2d_op *a, const sato2d_op *b, sato2d_op **out) {
  SATO2D_REQUIRE(a);
  SATO2D_REQUIRE(b);
  SATO2D_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new sato2d_op{sato2d::compose(a->p, b->p), a->field}; });
}

sato2d_status sato2d_op_commutator(const sato2d_op *a, const sato2d_op *b, sato2d_op **out) {
  SATO2D_REQUIRE(a);
  SATO2D_REQUIRE(b);
  SATO2D_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new sato2d_op{sato2d::commutator(a->p, b->p), a->field}; });
}

sato2d_status sato2d_op_ord(const sato2d_op *a, int *k, int *l) {
  SATO2D_REQUIRE(a);
  SATO2D_REQUIRE(k);
  SATO2D_REQUIRE(l);
  return guarded([&] {
    sato2d::BiOrd o = sato2d::ord_gamma(a->p);
    *k = o.k;
    *l = o.l;
  });
}

sato2d_status sato2d_op_format(const sato2d_op *a, char **out) {
  SATO2D_REQUIRE(a);
  SATO2D_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    std::string s = sato2d::format_canonical(a->p);
    char *buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void sato2d_op_free(sato2d_op *a) { delete a; }
void sato2d_string_free(char *s) { delete[] s; }

sato2d_status sato2d_run(const sato2d_session *s, const char *command, int argc,
                         const char *const *argv, sato2d_report **out) {
  SATO2D_REQUIRE(s);
  SATO2D_REQUIRE(command);
  SATO2D_REQUIRE(out);
  if (argc > 0)
    SATO2D_REQUIRE(argv);
  *out = nullptr;
  return guarded([&] {
    sato2d::Command cmd;
    cmd.name = command;
    for (int k = 0; k < argc; ++k) {
      std::string a = argv[k] ? argv[k] : "";
      if (a.size() > 2 && a.compare(0, 2, "--") == 0) {
        if (k + 1 >= argc)
          throw sato2d::UsageError("option " + a + " needs a value");
        cmd.opts[a.substr(2)].push_back(argv[++k]);
      } else {
        cmd.args.push_back(a);
      }
    }
    sato2d::Report rep = sato2d::run_command(s->s, cmd);
    *out = new sato2d_report{rep.text(), rep.json().dump(2) + "\n"};
  });
}

const char *sato2d_report_text(const sato2d_report *r) { return r ? r->text.c_str() : ""; }
const char *sato2d_report_json(const sato2d_report *r) { return r ? r->json.c_str() : ""; }
void sato2d_report_free(sato2d_report *r) { delete r; }

} // extern "C"
