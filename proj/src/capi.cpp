#include "dgcycle.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cycles.hpp"
#include "digraph.hpp"
#include "families.hpp"
#include "textio.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

const dgc::Digraph& unwrap(const dgc_digraph* d) {
  return *reinterpret_cast<const dgc::Digraph*>(d);
}

dgc_digraph* wrap(dgc::Digraph d) {
  return reinterpret_cast<dgc_digraph*>(new dgc::Digraph(std::move(d)));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const std::exception& e) {
    set_error(e.what());
    return -1;
  }
}

template <typename Fn>
int guarded_predicate(const dgc_digraph* d, Fn&& fn) {
  if (!d) {
    set_error("null digraph handle");
    return -1;
  }
  try {
    return fn(unwrap(d)) ? 1 : 0;
  } catch (const std::exception& e) {
    set_error(e.what());
    return -1;
  }
}

bool parse_theorem_mask(const char* s, unsigned* mask) {
  std::string t = s ? s : "all";
  if (t.empty() || t == "all") {
    *mask = 0x1f;
    return true;
  }
  if (t == "l34") {
    *mask = (1u << static_cast<int>(dgc::TheoremId::L34I)) |
            (1u << static_cast<int>(dgc::TheoremId::L34II));
    return true;
  }
  if (auto id = dgc::theorem_from_name(t)) {
    *mask = 1u << static_cast<int>(*id);
    return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* dgc_last_error(void) { return g_last_error.c_str(); }

int dgc_decode(const char* text, dgc_digraph** out) {
  if (!text || !out) {
    set_error("null argument");
    return -1;
  }
  return guarded([&] { *out = wrap(dgc::decode(text)); });
}

int dgc_generate(const char* family_spec, uint64_t seed, dgc_digraph** out) {
  if (!family_spec || !out) {
    set_error("null argument");
    return -1;
  }
  return guarded([&] {
    dgc::FamilySpec spec = dgc::parse_spec(family_spec, seed);
    *out = wrap(dgc::generate(spec));
  });
}

void dgc_free(dgc_digraph* d) {
  delete reinterpret_cast<dgc::Digraph*>(d);
}

int dgc_order(const dgc_digraph* d) { return d ? unwrap(d).order() : -1; }

char* dgc_encode(const dgc_digraph* d) {
  if (!d) return nullptr;
  return dup_string(dgc::encode(unwrap(d)));
}

char* dgc_dot(const dgc_digraph* d) {
  if (!d) return nullptr;
  return dup_string(dgc::to_dot(unwrap(d)));
}

char* dgc_classify(const dgc_digraph* d) {
  if (!d) return nullptr;
  std::string out;
  for (const auto& w : dgc::recognize(unwrap(d))) {
    out += dgc::describe(w.spec);
    out += '\n';
  }
  return dup_string(out);
}

void dgc_string_free(char* s) { std::free(s); }

int dgc_has_cycle(const dgc_digraph* d, int k) {
  return guarded_predicate(d, [k](const dgc::Digraph& g) {
    return dgc::has_cycle_length(g, k).has_value();
  });
}

int dgc_hamiltonian(const dgc_digraph* d) {
  return guarded_predicate(d, [](const dgc::Digraph& g) {
    return dgc::cycle_spectrum(g).hamiltonian;
  });
}

int dgc_pre_hamiltonian(const dgc_digraph* d) {
  return guarded_predicate(d, [](const dgc::Digraph& g) {
    return dgc::cycle_spectrum(g).pre_hamiltonian;
  });
}

int dgc_pancyclic(const dgc_digraph* d) {
  return guarded_predicate(d, [](const dgc::Digraph& g) {
    return dgc::cycle_spectrum(g).pancyclic;
  });
}

int dgc_strong(const dgc_digraph* d) {
  return guarded_predicate(d, [](const dgc::Digraph& g) { return dgc::is_strong(g); });
}

int dgc_meets_hypotheses(const dgc_digraph* d) {
  return guarded_predicate(d, [](const dgc::Digraph& g) {
    return dgc::meets_hypotheses(g).holds;
  });
}

int dgc_verify(const dgc_verify_options* options, char** report,
               uint64_t* violations) {
  if (!options || !report || !violations) {
    set_error("null argument");
    return -1;
  }
  dgc::SweepOptions opt;
  opt.p = options->p;
  opt.exhaustive = options->exhaustive != 0;
  opt.seed = options->seed;
  opt.trials = options->trials;
  if (options->arc_prob > 0) opt.arc_prob = options->arc_prob;
  opt.workers = options->workers;
  if (!parse_theorem_mask(options->theorems, &opt.theorem_mask)) {
    set_error("unknown theorem selector");
    return -1;
  }
  return guarded([&] {
    dgc::SweepReport r = dgc::sweep(opt);
    *report = dup_string(dgc::render_report(r));
    *violations = r.total_violations();
  });
}

}  // extern "C"
