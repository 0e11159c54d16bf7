#include "thetaspline/run_config.hpp"

#include <set>

#include <json.hpp>

#include "thetaspline/error.hpp"

namespace thetaspline {

using nlohmann::ordered_json;

#define THETASPLINE_CONFIG_FIELDS(X) \
  X(command) X(which) X(family) X(kind) X(d) X(lambda) X(u) X(N) X(nu) X(m) X(s) X(r) X(y) X(sigma) X(t) \
  X(N_list) X(t_grid) X(s_list) X(v_grid) X(omega) X(zeros) X(format) X(output) X(max_bits) X(threads) X(timing)

std::string RunConfig::to_json() const {
  ordered_json j;
#define X(f) j[#f] = f;
  THETASPLINE_CONFIG_FIELDS(X)
#undef X
  return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json(const std::string& text) {
  RunConfig c;
  try {
    auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    static const std::set<std::string> known = {
#define X(f) #f,
        THETASPLINE_CONFIG_FIELDS(X)
#undef X
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!known.count(it.key())) throw ValidationError("unknown config key '" + it.key() + "'");
    }
#define X(f) \
  if (j.contains(#f)) j.at(#f).get_to(c.f);
    THETASPLINE_CONFIG_FIELDS(X)
#undef X
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad config: ") + e.what());
  }
  return c;
}

#undef THETASPLINE_CONFIG_FIELDS

}  // namespace thetaspline
