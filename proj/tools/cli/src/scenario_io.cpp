#include "asrc_cli/scenario_io.hpp"


#include "asrc/builtin_scenarios.hpp"
#include "asrc/errors.hpp"
#include "json_reader.hpp"

namespace asrc::cli {

ConfigFileError::ConfigFileError(std::string file, int line, std::string field,
                                 const std::string& message)
    : std::runtime_error(file + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                         (field.empty() ? std::string() : ": field '" + field + "'") + ": " +
                         message),
      file_(std::move(file)),
      line_(line),
      field_(std::move(field)) {}

namespace {

using nlohmann::json;

void read_wmr(const Node& n, WmrParams& p) {
  n.allow({"mass_kg", "inertia_kg_m2", "wheel_inertia_kg_m2", "wheel_radius_m", "track_width_m",
           "cm_offset_m", "command_scale"});
  n.opt_number("mass_kg", p.mass);
  n.opt_number("inertia_kg_m2", p.inertia);
  n.opt_number("wheel_inertia_kg_m2", p.wheel_inertia);
  n.opt_number("wheel_radius_m", p.wheel_radius);
  n.opt_number("track_width_m", p.track_width);
  n.opt_number("cm_offset_m", p.cm_offset);
  n.opt_number("command_scale", p.command_scale);
}

void read_arm(const Node& n, TwoLinkParams& p) {
  n.allow({"link_mass_kg", "link_length_m", "gravity_m_s2"});
  n.opt_array("link_mass_kg", p.link_mass);
  n.opt_array("link_length_m", p.link_length);
  n.opt_number("gravity_m_s2", p.gravity);
}

void read_plant(const Node& n, PlantSpec& p) {
  n.allow({"kind", "wmr", "two_link", "friction", "disturbance", "payload"});
  if (auto k = n.opt_child("kind")) {
    p.kind = k->convert([](const std::string& s) { return plant_kind_from_string(s); });
  }
  if (auto c = n.opt_child("wmr")) read_wmr(*c, p.wmr);
  if (auto c = n.opt_child("two_link")) read_arm(*c, p.arm);
  if (auto c = n.opt_child("friction")) {
    c->allow({"viscous", "coulomb", "smoothing_rad_s"});
    c->opt_number("viscous", p.friction.viscous);
    c->opt_number("coulomb", p.friction.coulomb);
    c->opt_number("smoothing_rad_s", p.friction.smoothing);
  }
  if (auto c = n.opt_child("disturbance")) {
    c->allow({"amplitude", "period_s"});
    c->opt_number("amplitude", p.disturbance.amplitude);
    c->opt_number("period_s", p.disturbance.period);
  }
  if (auto c = n.opt_child("payload")) {
    p.payload.clear();
    for (const Node& ev : c->elements()) {
      ev.allow({"t_on_s", "t_off_s", "mass_kg", "inertia_kg_m2"});
      PayloadEvent e;
      ev.number("t_on_s", e.t_on);
      ev.number("t_off_s", e.t_off);
      ev.number("mass_kg", e.mass);
      ev.opt_number("inertia_kg_m2", e.inertia);
      p.payload.push_back(e);
    }
  }
}

void read_config(const Node& n, ControllerConfig& c) {
  n.allow({"regressor", "omega", "g", "varpi", "alpha", "beta", "varsigma", "theta_init",
           "gamma_init"});
  if (auto r = n.opt_child("regressor")) {
    c.order = r->convert([](const std::string& s) { return regressor_order_from_string(s); });
  }
  if (auto m = n.opt_child("omega")) c.omega = m->matrix();
  if (auto m = n.opt_child("g")) c.g = m->matrix();
  n.opt_number("varpi", c.varpi);
  n.opt_array("alpha", c.alpha);
  n.opt_number("beta", c.beta);
  n.opt_number("varsigma", c.varsigma);
  n.opt_array("theta_init", c.theta_init);
  n.opt_number("gamma_init", c.gamma_init);
}

void read_trajectory(const Node& n, DesiredTrajectory& t) {
  n.allow({"offset_rad", "rate_rad_s", "amplitude_rad", "frequency_rad_s", "phase_rad"});
  if (auto v = n.opt_child("offset_rad")) t.offset = v->vector();
  const auto size = t.offset.size();
  auto read = [&](const char* key, Vec& dst) {
    if (auto v = n.opt_child(key)) {
      dst = v->vector();
    } else if (dst.size() != size) {
      dst = Vec::Zero(size);
    }
  };
  read("rate_rad_s", t.rate);
  read("amplitude_rad", t.amplitude);
  read("frequency_rad_s", t.frequency);
  read("phase_rad", t.phase);
}

Scenario read_scenario(const Node& root) {
  root.allow({"base", "name", "plant", "controller", "config", "asmc", "robust_theta",
              "trajectory", "q0_rad", "qd0_rad_s", "horizon_s", "control_period_s", "substeps",
              "rate_noise_std_rad_s", "seed"});
  Scenario sc;
  sc.q0 = Vec::Zero(2);
  sc.qd0 = Vec::Zero(2);
  if (auto b = root.opt_child("base")) {
    sc = b->convert([](const std::string& s) { return builtin_scenario(s); });
  }
  if (auto v = root.opt_child("name")) sc.name = v->string();
  if (auto c = root.opt_child("plant")) read_plant(*c, sc.plant);
  if (auto c = root.opt_child("controller")) {
    sc.controller = c->convert([](const std::string& s) { return controller_kind_from_string(s); });
  }
  if (auto c = root.opt_child("config")) read_config(*c, sc.config);
  if (auto c = root.opt_child("asmc")) {
    c->allow({"k_bar", "k_init", "epsilon", "beta"});
    c->opt_number("k_bar", sc.asmc.k_bar);
    c->opt_number("k_init", sc.asmc.k_init);
    c->opt_number("epsilon", sc.asmc.epsilon);
    c->opt_number("beta", sc.asmc.beta);
  }
  if (auto c = root.opt_child("robust_theta")) {
    if (c->is_null()) {
      sc.robust_theta.reset();
    } else {
      ThetaStar t;
      c->array(t.theta);
      sc.robust_theta = t;
    }
  }
  if (auto c = root.opt_child("trajectory")) read_trajectory(*c, sc.trajectory);
  if (auto v = root.opt_child("q0_rad")) sc.q0 = v->vector();
  if (auto v = root.opt_child("qd0_rad_s")) sc.qd0 = v->vector();
  root.opt_number("horizon_s", sc.horizon);
  root.opt_number("control_period_s", sc.control_period);
  if (auto v = root.opt_child("substeps")) sc.substeps = static_cast<int>(v->integer(1, 1'000'000));
  root.opt_number("rate_noise_std_rad_s", sc.rate_noise_std);
  if (auto v = root.opt_child("seed")) sc.seed = v->unsigned_integer();
  return sc;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r).transpose()));
  return rows;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& source) {
  const Document doc(text, source);
  return read_scenario(doc.root());
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_text_file(path), path.string());
}

std::string serialize_scenario(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  json plant;
  plant["kind"] = std::string(to_string(sc.plant.kind));
  plant["wmr"] = {{"mass_kg", sc.plant.wmr.mass},
                  {"inertia_kg_m2", sc.plant.wmr.inertia},
                  {"wheel_inertia_kg_m2", sc.plant.wmr.wheel_inertia},
                  {"wheel_radius_m", sc.plant.wmr.wheel_radius},
                  {"track_width_m", sc.plant.wmr.track_width},
                  {"cm_offset_m", sc.plant.wmr.cm_offset},
                  {"command_scale", sc.plant.wmr.command_scale}};
  plant["two_link"] = {{"link_mass_kg", sc.plant.arm.link_mass},
                       {"link_length_m", sc.plant.arm.link_length},
                       {"gravity_m_s2", sc.plant.arm.gravity}};
  plant["friction"] = {{"viscous", sc.plant.friction.viscous},
                       {"coulomb", sc.plant.friction.coulomb},
                       {"smoothing_rad_s", sc.plant.friction.smoothing}};
  plant["disturbance"] = {{"amplitude", sc.plant.disturbance.amplitude},
                          {"period_s", sc.plant.disturbance.period}};
  json payload = json::array();
  for (const PayloadEvent& e : sc.plant.payload) {
    payload.push_back({{"t_on_s", e.t_on},
                       {"t_off_s", e.t_off},
                       {"mass_kg", e.mass},
                       {"inertia_kg_m2", e.inertia}});
  }
  plant["payload"] = payload;
  j["plant"] = plant;
  j["controller"] = std::string(to_string(sc.controller));
  j["config"] = {{"regressor", std::string(to_string(sc.config.order))},
                 {"omega", mat_json(sc.config.omega)},
                 {"g", mat_json(sc.config.g)},
                 {"varpi", sc.config.varpi},
                 {"alpha", sc.config.alpha},
                 {"beta", sc.config.beta},
                 {"varsigma", sc.config.varsigma},
                 {"theta_init", sc.config.theta_init},
                 {"gamma_init", sc.config.gamma_init}};
  j["asmc"] = {{"k_bar", sc.asmc.k_bar},
               {"k_init", sc.asmc.k_init},
               {"epsilon", sc.asmc.epsilon},
               {"beta", sc.asmc.beta}};
  j["robust_theta"] = sc.robust_theta ? json(sc.robust_theta->theta) : json(nullptr);
  j["trajectory"] = {{"offset_rad", vec_json(sc.trajectory.offset)},
                     {"rate_rad_s", vec_json(sc.trajectory.rate)},
                     {"amplitude_rad", vec_json(sc.trajectory.amplitude)},
                     {"frequency_rad_s", vec_json(sc.trajectory.frequency)},
                     {"phase_rad", vec_json(sc.trajectory.phase)}};
  j["q0_rad"] = vec_json(sc.q0);
  j["qd0_rad_s"] = vec_json(sc.qd0);
  j["horizon_s"] = sc.horizon;
  j["control_period_s"] = sc.control_period;
  j["substeps"] = sc.substeps;
  j["rate_noise_std_rad_s"] = sc.rate_noise_std;
  j["seed"] = sc.seed;
  return j.dump(2) + "\n";
}

}  // namespace asrc::cli
