#include "abflux/run.hpp"
#include "abflux/errors.hpp"
#include "abflux/sampling.hpp"
#include "abflux/scattering.hpp"
#include "abflux/spectrum.hpp"
#include "abflux/waveop.hpp"
#include "abflux/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace abflux::cli {

using nlohmann::json;

namespace {

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json mjson(const Matrix2& m)
{
  return json::array({json::array({cjson(m(0, 0)), cjson(m(0, 1))}), json::array({cjson(m(1, 0)), cjson(m(1, 1))})});
}

json grid_json(const GridSpec& g)
{
  return {{"min", g.min}, {"max", g.max}, {"count", g.count}, {"spacing", g.spacing}};
}

// %.17g
std::string num(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_row(const Matrix2& m)
{
  std::string s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += "," + num(m(i, j).real()) + "," + num(m(i, j).imag());
  return s;
}

json envelope(const RunConfig& cfg, const std::string& kind)
{
  return {{"schema", verify::schema_version}, {"kind", kind}, {"config", config_json(cfg)}};
}

std::string render_smatrix(const RunConfig& cfg, unsigned threads)
{
  const ExtensionPair p = cfg.pair();
  const Flux a(cfg.alpha);
  const std::vector<double> ks = cfg.kappa.nodes();
  std::vector<ScatteringResult> rows(ks.size());
  parallel_for(ks.size(), threads, [&](std::size_t i) { rows[i] = s_matrix(p, a, ks[i]); });
  if (cfg.format == "json") {
    json doc = envelope(cfg, "smatrix");
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"kappa", r.kappa}, {"s", mjson(r.s)}, {"unitarity_defect", r.unitarity_defect()},
                     {"saturated", r.saturated}});
    doc["rows"] = arr;
    return doc.dump(2) + "\n";
  }
  std::string out = "kappa,s11_re,s11_im,s12_re,s12_im,s21_re,s21_im,s22_re,s22_im,unitarity_defect\n";
  for (const auto& r : rows) out += num(r.kappa) + matrix_row(r.s) + "," + num(r.unitarity_defect()) + "\n";
  return out;
}

std::string render_spectrum(const RunConfig& cfg)
{
  const ExtensionPair p = cfg.pair();
  const std::vector<BoundState> bs = find_negative_eigenvalues(p, Flux(cfg.alpha));
  if (cfg.format == "json") {
    json doc = envelope(cfg, "spectrum");
    json arr = json::array();
    for (const auto& b : bs) {
      json basis = json::array();
      for (const auto& v : b.basis) basis.push_back(json::array({cjson(v(0)), cjson(v(1))}));
      arr.push_back({{"z", b.z}, {"multiplicity", b.multiplicity}, {"basis", basis},
                     {"proximity_warning", b.proximity_warning}});
    }
    doc["eigenvalues"] = arr;
    doc["negative_count"] = negative_count(p);
    return doc.dump(2) + "\n";
  }
  std::string out = "z,multiplicity,xi1_re,xi1_im,xi2_re,xi2_im\n";
  for (const auto& b : bs) {
    const Vector2& v = b.basis.front();
    out += num(b.z) + "," + std::to_string(b.multiplicity) + "," + num(v(0).real()) + "," + num(v(0).imag()) + "," +
           num(v(1).real()) + "," + num(v(1).imag()) + "\n";
  }
  return out;
}

std::string render_classify(const RunConfig& cfg)
{
  const ExtensionPair p = cfg.pair();
  const Flux a(cfg.alpha);
  const AsymptoticClass zero = s_asymptotic(p, a, End::Zero), inf = s_asymptotic(p, a, End::Infinity);
  const auto indep = classify_energy_independent(p, a);
  if (cfg.format == "json") {
    json doc = envelope(cfg, "classify");
    doc["zero"] = {{"case", zero.label}, {"limit", mjson(zero.limit)}};
    doc["infinity"] = {{"case", inf.label}, {"limit", mjson(inf.limit)}};
    doc["energy_independent"] = indep.has_value();
    if (indep) doc["constant_s"] = mjson(*indep);
    doc["negative_count"] = negative_count(p);
    return doc.dump(2) + "\n";
  }
  std::string out = "end,case,s11_re,s11_im,s12_re,s12_im,s21_re,s21_im,s22_re,s22_im,energy_independent\n";
  for (const auto* c : {&zero, &inf})
    out += std::string(c->end == End::Zero ? "zero" : "infinity") + "," + c->label + matrix_row(c->limit) + "," +
           (indep ? "true" : "false") + "\n";
  return out;
}

std::string render_wavesymbol(const RunConfig& cfg, unsigned threads)
{
  const ExtensionPair p = cfg.pair();
  const Flux a(cfg.alpha);
  const std::vector<double> xs = cfg.x.nodes();
  std::vector<Matrix2> w(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t i) { w[i] = wave_symbol(p, a, xs[i], cfg.wave_kappa); });
  if (cfg.format == "json") {
    json doc = envelope(cfg, "wavesymbol");
    json arr = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) arr.push_back({{"x", xs[i]}, {"w", mjson(w[i])}});
    doc["kappa"] = cfg.wave_kappa;
    doc["rows"] = arr;
    return doc.dump(2) + "\n";
  }
  std::string out = "x,kappa,w11_re,w11_im,w12_re,w12_im,w21_re,w21_im,w22_re,w22_im\n";
  for (std::size_t i = 0; i < xs.size(); ++i) out += num(xs[i]) + "," + num(cfg.wave_kappa) + matrix_row(w[i]) + "\n";
  return out;
}

std::string render_verify(const RunConfig& cfg, unsigned threads, bool& all_passed,
                          std::vector<verify::OracleReport>* keep)
{
  const auto reports = verification_suite(cfg, threads);
  all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (keep) *keep = reports;
  if (cfg.format == "json") {
    json doc = envelope(cfg, "verify");
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    doc["reports"] = arr;
    doc["passed"] = all_passed;
    return doc.dump(2) + "\n";
  }
  std::string out = "name,target_re,target_im,computed_re,computed_im,tolerance,passed,metadata\n";
  for (const auto& r : reports) {
    std::string md = r.metadata;
    std::replace(md.begin(), md.end(), ',', ';');
    out += "\"" + r.name + "\"," + num(r.target.real()) + "," + num(r.target.imag()) + "," + num(r.computed.real()) + "," +
           num(r.computed.imag()) + "," + num(r.tolerance) + "," + (r.passed ? "true" : "false") + "," + md + "\n";
  }
  return out;
}

// Invariant probes on the configured pair.
verify::OracleReport probe_unitarity(const RunConfig& cfg)
{
  verify::OracleReport r;
  r.name = "probe_unitarity";
  r.tolerance = 1e-9;
  const ExtensionPair p = cfg.pair();
  double worst = 0.0;
  for (double k : cfg.kappa.nodes()) worst = std::max(worst, s_matrix(p, Flux(cfg.alpha), k).unitarity_defect());
  r.computed = worst;
  r.metadata = "kappa grid points=" + std::to_string(cfg.kappa.count);
  r.passed = verify::within(r);
  return r;
}

verify::OracleReport probe_krein_adjoint(const RunConfig& cfg)
{
  verify::OracleReport r;
  r.name = "probe_krein_adjoint";
  r.tolerance = 1e-12;
  const ExtensionPair p = cfg.pair();
  const Flux a(cfg.alpha);
  sampling::Rng rng(cfg.seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const cplx z(u(rng), u(rng) + (u(rng) > 0 ? 0.1 : -0.1));
    try {
      const Matrix2 k = krein_matrix(p, a, SpectralPoint::off_axis(z));
      const Matrix2 kc = krein_matrix(p, a, SpectralPoint::off_axis(std::conj(z)));
      worst = std::max(worst, norm2(k.adjoint() - kc) / std::max(1.0, norm2(k)));
    } catch (const EigenvalueHit&) {
    }
  }
  r.computed = worst;
  r.metadata = "seed=" + std::to_string(cfg.seed) + ",points=10";
  r.passed = verify::within(r);
  return r;
}

verify::OracleReport probe_count(const RunConfig& cfg)
{
  verify::OracleReport r;
  r.name = "probe_eigenvalue_count";
  r.tolerance = 0.0;
  const ExtensionPair p = cfg.pair();
  int total = 0;
  for (const auto& b : find_negative_eigenvalues(p, Flux(cfg.alpha))) total += b.multiplicity;
  r.target = negative_count(p);
  r.computed = total;
  r.passed = verify::within(r);
  return r;
}

}  // namespace

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn)
{
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

json config_json(const RunConfig& cfg)
{
  json c = {{"alpha", cfg.alpha}, {"kappa", grid_json(cfg.kappa)}, {"x", grid_json(cfg.x)},
            {"format", cfg.format}, {"wavesymbol.kappa", cfg.wave_kappa}, {"seed", cfg.seed},
            {"outputs", cfg.outputs}};
  if (cfg.unitary_form) {
    c["U"] = mjson(cfg.u);
  } else {
    c["C"] = mjson(cfg.c);
    c["D"] = mjson(cfg.d);
  }
  return c;
}

json report_json(const verify::OracleReport& r)
{
  return {{"name", r.name},           {"target", cjson(r.target)}, {"computed", cjson(r.computed)},
          {"tolerance", r.tolerance}, {"passed", r.passed},        {"metadata", r.metadata},
          {"sequence", r.sequence}};
}

std::vector<verify::OracleReport> verification_suite(const RunConfig& cfg, unsigned threads)
{
  const Flux a(cfg.alpha);
  const std::vector<double> xs = {-5.0, -2.5, 0.0, 2.5, 5.0};
  std::vector<std::function<verify::OracleReport()>> jobs = {
      [] { return verify::hankel_norm_check(0.2); },
      [] { return verify::hankel_norm_check(0.5); },
      [] { return verify::hankel_norm_check(0.8); },
      [] { return verify::dirac_limit_check(0, 0.3, 1.0, {1e-2, 1e-3, 1e-4}); },
      [] { return verify::dirac_limit_check(-1, 0.7, 2.0, {1e-2, 1e-3, 1e-4}); },
      [&] { return verify::mellin_pair_check(SymbolVariant::PhiMinus, 0, a, xs); },
      [&] { return verify::mellin_pair_check(SymbolVariant::PhiTilde, 0, a, xs); },
      [&] { return verify::mellin_pair_check(SymbolVariant::PhiTilde, -1, a, xs); },
      [&] { return verify::boundary_value_check(a, 1.0); },
      [&] { return probe_unitarity(cfg); },
      [&] { return probe_krein_adjoint(cfg); },
      [&] { return probe_count(cfg); },
  };
  std::vector<verify::OracleReport> out(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { out[i] = jobs[i](); });
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.name < r.name; });
  return out;
}

std::string render(const RunConfig& cfg, const std::string& output, unsigned threads, bool& all_passed,
                   std::vector<verify::OracleReport>* reports)
{
  all_passed = true;
  if (output == "smatrix") return render_smatrix(cfg, threads);
  if (output == "spectrum") return render_spectrum(cfg);
  if (output == "classify") return render_classify(cfg);
  if (output == "wavesymbol") return render_wavesymbol(cfg, threads);
  if (output == "verify") return render_verify(cfg, threads, all_passed, reports);
  throw ConfigError("unknown output '" + output + "'");
}

RunOutcome run(const RunConfig& cfg, const std::filesystem::path& out_dir, unsigned threads)
{
  RunOutcome res;
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    res.exit_code = io_error;
    return res;
  }
  for (const auto& o : cfg.outputs) {
    bool passed = true;
    std::vector<verify::OracleReport> reps;
    const std::string text = render(cfg, o, threads, passed, &reps);
    res.reports.insert(res.reports.end(), reps.begin(), reps.end());
    const auto path = out_dir / (o + "." + cfg.format);
    std::ofstream f(path);
    f << text;
    if (!f) {
      res.exit_code = io_error;
      return res;
    }
    res.files.push_back(path);
    if (!passed) res.exit_code = verification_failed;
  }
  return res;
}

}  // namespace abflux::cli
