/*
  mtzeta, a library for Mordell-Tornheim multiple zeta values and
  Arakawa-Kaneko type zeta functions.

  This library is licensed under the Apache License, Version 2.0 (the "License");
  you may not use this library except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "mtzeta/identities.hpp"

using json = nlohmann::ordered_json;
using namespace mtzeta;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// certified decimal digits for a given binary precision
size_t out_digits(long prec) {
    long d = static_cast<long>(static_cast<double>(prec) * 0.30102999566398) - 2;
    return static_cast<size_t>(d < 8 ? 8 : d);
}

std::vector<int> parse_int_list(const std::string &s, const char *who) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw domain_error(std::string(who) + ": empty entry in list");
            size_t pos = 0;
            int v = std::stoi(cur, &pos);
            if (pos != cur.size())
                throw std::invalid_argument(std::string(who) + ": bad integer '" + cur + "'");
            out.push_back(v);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(who) + ": empty integer list");
    return out;
}

// decimal, rational p/q, or complex a+bi (imaginary part marked by a
// trailing i); examples: 3, 7/2, 3.5, 3+0.5i, -2.5-1i, 0.5i
BigReal parse_real(const std::string &tok, long bits) {
    if (tok.find('/') != std::string::npos) {
        mpq_class q(tok);
        q.canonicalize();
        return BigReal(Rational(q), bits);
    }
    return BigReal(tok, bits);
}

BigComplex parse_complex(const std::string &str, long bits) {
    std::string s;
    for (char c : str)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty numeric argument");
    if (s.back() != 'i' && s.back() != 'I') return BigComplex(parse_real(s, bits));
    s.pop_back(); // drop the i
    size_t split = std::string::npos;
    for (size_t pos = s.size(); pos-- > 1;) {
        if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E') {
            split = pos;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string im = s.empty() || s == "+" ? "1" : (s == "-" ? "-1" : s);
        return BigComplex(BigReal(0L, bits), parse_real(im, bits));
    }
    std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+" || im == "-") im += "1";
    return BigComplex(parse_real(re, bits), parse_real(im, bits));
}

IndexVector parse_lambda_index(const std::string &s, const char *who) {
    std::vector<int> all = parse_int_list(s, who);
    if (all.size() < 2)
        throw std::invalid_argument(std::string(who) +
                                    ": need at least one entry plus the trailing exponent");
    int tail = all.back();
    all.pop_back();
    return IndexVector(all, tail);
}

json value_json(const ValueWithError &v, long prec) {
    const size_t digits = out_digits(prec);
    json j;
    j["re"] = v.estimate.re().str(digits);
    j["im"] = v.estimate.im().str(digits);
    j["digits"] = digits;
    j["abs_error"] = v.abs_error.str(6);
    j["rigorous"] = v.rigorous;
    return j;
}

void print_value_human(const ValueWithError &v, long prec) {
    const size_t digits = out_digits(prec);
    if (v.estimate.is_real())
        std::cout << "value     = " << v.estimate.re().str(digits) << "\n";
    else
        std::cout << "value     = " << v.estimate.str(digits) << "\n";
    std::cout << "abs_error <= " << v.abs_error.str(6) << "\n";
    std::cout << "rigorous  = " << (v.rigorous ? "yes" : "no") << "\n";
    std::cout << "digits    = " << digits << "\n";
}

json report_json(const CheckReport &r, long prec) {
    json j;
    j["id"] = r.identity_id;
    j["parameters"] = r.parameters;
    j["lhs"] = value_json(r.lhs, prec);
    j["rhs"] = value_json(r.rhs, prec);
    j["residual"] = r.residual().str(6);
    j["budget"] = r.budget().str(6);
    j["slack"] = r.slack.str(6);
    j["rigorous"] = r.rigorous();
    j["pass"] = r.pass();
    if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
    return j;
}

struct CommonOpts {
    long prec = 256;
    bool as_json = false;
};

void add_prec(CLI::App *cmd, CommonOpts &o) {
    cmd->add_option("--prec", o.prec, "working precision in bits")
        ->default_val(256)
        ->check(CLI::Range(64L, 4096L));
    cmd->add_flag("--json", o.as_json, "machine-readable output");
}

int run_coeff(const std::string &klist, long count, bool as_json, bool as_csv) {
    std::vector<int> ks = parse_int_list(klist, "--k");
    for (int k : ks)
        if (k < 1) throw domain_error("coeff: exponents must be positive integers");
    if (count < 1) throw domain_error("coeff: --count must be >= 1");
    std::vector<Rational> c = akmt_coefficients(IndexVector(ks), static_cast<int>(count) - 1);
    if (as_json) {
        json rows = json::array();
        for (size_t m = 0; m < c.size(); ++m)
            rows.push_back({{"m", m},
                            {"numerator", c[m].numerator().get_str()},
                            {"denominator", c[m].denominator().get_str()}});
        json out;
        out["command"] = "coeff";
        out["k"] = klist;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
    } else if (as_csv) {
        std::cout << "m,numerator,denominator\n";
        for (size_t m = 0; m < c.size(); ++m)
            std::cout << m << "," << c[m].numerator().get_str() << ","
                      << c[m].denominator().get_str() << "\n";
    } else {
        std::cout << "m\tnumerator\tdenominator\n";
        for (size_t m = 0; m < c.size(); ++m)
            std::cout << m << "\t" << c[m].numerator().get_str() << "\t"
                      << c[m].denominator().get_str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"mtzeta: Mordell-Tornheim multiple zeta values, Arakawa-Kaneko type "
                 "zeta functions and their identities, at arbitrary precision"};
    app.require_subcommand(1);

    // ---- coeff ----
    auto *coeff = app.add_subcommand(
        "coeff", "tabulate the generalized poly-Bernoulli coefficients of an index");
    std::string coeff_k;
    long coeff_count = 1;
    bool coeff_json = false, coeff_csv = false;
    coeff->add_option("--k", coeff_k, "exponent list, e.g. 2,1,1")->required();
    coeff->add_option("--count", coeff_count, "number of rows (m = 0 .. count-1)")->required();
    coeff->add_flag("--json", coeff_json, "machine-readable output");
    coeff->add_flag("--csv", coeff_csv, "CSV output");

    // ---- eval ----
    auto *eval = app.add_subcommand("eval", "evaluate one of the function families");
    eval->require_subcommand(1);

    CommonOpts mt_o;
    auto *ev_mt = eval->add_subcommand("mt", "Mordell-Tornheim zeta value");
    std::string mt_exponents, mt_last, mt_method = "auto";
    long mt_mmax = 0;
    ev_mt->add_option("--exponents", mt_exponents, "exponents s_1..s_r (complex allowed)")
        ->required();
    ev_mt->add_option("--last", mt_last, "final exponent s_{r+1} (complex allowed)")->required();
    ev_mt->add_option("--method", mt_method, "auto|fast|sum|quadrature|oracle")
        ->check(CLI::IsMember({"auto", "fast", "sum", "quadrature", "oracle"}));
    ev_mt->add_option("--mmax", mt_mmax, "summation cutoff override (oracle)");
    add_prec(ev_mt, mt_o);

    CommonOpts xi_o;
    auto *ev_xi = eval->add_subcommand("xi", "Arakawa-Kaneko type value xi_MT(k; s)");
    std::string xi_k, xi_s, xi_split;
    ev_xi->add_option("--k", xi_k, "index k_1..k_r (positive integers)")->required();
    ev_xi->add_option("--s", xi_s, "argument s (complex allowed)")->required();
    ev_xi->add_option("--split", xi_split, "Mellin split point (default 1)");
    add_prec(ev_xi, xi_o);

    CommonOpts xig_o;
    auto *ev_xig = eval->add_subcommand("xig", "generalized value xi_{MT,g}(k_1..k_g; s)");
    std::string xig_indices, xig_s;
    ev_xig
        ->add_option("--indices", xig_indices,
                     "colon-separated index groups, trailing exponent last in each, "
                     "e.g. 1,1,1:1,1  ('0' alone means g = 0)")
        ->required();
    ev_xig->add_option("--s", xig_s, "argument s")->required();
    add_prec(ev_xig, xig_o);

    CommonOpts la_o;
    auto *ev_la = eval->add_subcommand("lambda", "generating function Lambda_k(z)");
    std::string la_k, la_z;
    ev_la->add_option("--k", la_k, "index with trailing exponent last, e.g. 1,1,0")->required();
    ev_la->add_option("--z", la_z, "argument z in [0,1)")->required();
    add_prec(ev_la, la_o);

    CommonOpts z2_o;
    auto *ev_z2 = eval->add_subcommand("zeta2", "double zeta sum_{m>n} m^{-a} n^{-b}");
    long z2_a = 0, z2_b = 0;
    ev_z2->add_option("--a", z2_a, "outer exponent (>= 2)")->required();
    ev_z2->add_option("--b", z2_b, "inner exponent (>= 1)")->required();
    add_prec(ev_z2, z2_o);

    // ---- verify ----
    auto *verify = app.add_subcommand("verify", "run identity verification suites");
    std::vector<std::string> verify_suites;
    CommonOpts vf_o;
    std::string vf_slack = "1e-10", vf_grid, vf_golden_out;
    verify->add_option("suites", verify_suites, "suite ids or 'all'")->required();
    verify->add_option("--slack", vf_slack, "explicit pass slack (absolute)");
    verify->add_option("--grid", vf_grid, "restrict grids, e.g. k=1 or r=2,m=3");
    verify->add_option("--write-golden", vf_golden_out,
                       "write the JSON report (without timings) to this file");
    add_prec(verify, vf_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    const auto t0 = Clock::now();
    try {
        if (coeff->parsed()) return run_coeff(coeff_k, coeff_count, coeff_json, coeff_csv);

        if (eval->parsed()) {
            CommonOpts o;
            ValueWithError v;
            json params;
            std::string kind;
            if (ev_mt->parsed()) {
                kind = "mt";
                o = mt_o;
                const long bits = o.prec + kGuardBits;
                BigComplex last = parse_complex(mt_last, bits);
                const bool all_int =
                    mt_exponents.find_first_not_of("0123456789, ") == std::string::npos;
                MTArgument arg = [&]() -> MTArgument {
                    if (all_int) return MTArgument(parse_int_list(mt_exponents, "--exponents"), last);
                    std::vector<BigComplex> es;
                    std::string cur;
                    for (char ch : mt_exponents + ',') {
                        if (ch == ',') {
                            es.push_back(parse_complex(cur, bits));
                            cur.clear();
                        } else {
                            cur += ch;
                        }
                    }
                    return MTArgument(es, last);
                }();
                const long cutoff = mt_mmax > 0 ? mt_mmax : 600;
                if (mt_method == "oracle")
                    v = mt_zeta_oracle(arg, cutoff, o.prec);
                else if (mt_method == "sum")
                    v = mt_zeta_sum(arg, o.prec);
                else if (mt_method == "quadrature")
                    v = mt_zeta_quadrature(arg, o.prec);
                else if (mt_method == "fast" || arg.int_exponents)
                    v = mt_zeta_fast(arg, o.prec);
                else
                    v = mt_zeta_oracle(arg, cutoff, o.prec);
                params["exponents"] = mt_exponents;
                params["last"] = mt_last;
                params["method"] = mt_method;
            } else if (ev_xi->parsed()) {
                kind = "xi";
                o = xi_o;
                const long bits = o.prec + kGuardBits;
                XiArgument arg{IndexVector(parse_int_list(xi_k, "--k")),
                               parse_complex(xi_s, bits)};
                if (xi_split.empty())
                    v = xi_mt_eval(arg, o.prec);
                else
                    v = xi_mt_eval_split(arg, o.prec, parse_real(xi_split, bits));
                params["k"] = xi_k;
                params["s"] = xi_s;
            } else if (ev_xig->parsed()) {
                kind = "xig";
                o = xig_o;
                const long bits = o.prec + kGuardBits;
                std::vector<IndexVector> groups;
                if (xig_indices != "0" && !xig_indices.empty()) {
                    std::string cur;
                    for (char ch : xig_indices + ':') {
                        if (ch == ':') {
                            groups.push_back(parse_lambda_index(cur, "--indices"));
                            cur.clear();
                        } else {
                            cur += ch;
                        }
                    }
                }
                v = xi_mt_g_eval(XiGArgument{groups, parse_complex(xig_s, bits)}, o.prec);
                params["indices"] = xig_indices;
                params["s"] = xig_s;
            } else if (ev_la->parsed()) {
                kind = "lambda";
                o = la_o;
                const long bits = o.prec + kGuardBits;
                v = lambda_eval(parse_lambda_index(la_k, "--k"), parse_real(la_z, bits), o.prec);
                params["k"] = la_k;
                params["z"] = la_z;
            } else {
                kind = "zeta2";
                o = z2_o;
                v = euler_double_zeta(z2_a, z2_b, o.prec);
                params["a"] = z2_a;
                params["b"] = z2_b;
            }
            if (o.as_json) {
                json out;
                out["command"] = "eval";
                out["kind"] = kind;
                out["parameters"] = params;
                out["prec"] = o.prec;
                out["result"] = value_json(v, o.prec);
                out["elapsed_ms"] = elapsed_ms(t0);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "eval " << kind;
                for (auto &[key, val] : params.items())
                    std::cout << " " << key << "="
                              << (val.is_string() ? val.get<std::string>() : val.dump());
                std::cout << " prec=" << o.prec << "\n";
                print_value_human(v, o.prec);
                std::cout << "elapsed_ms = " << elapsed_ms(t0) << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            SuiteConfig cfg(vf_o.prec);
            cfg.slack = BigReal(vf_slack, vf_o.prec + kGuardBits);
            if (!vf_grid.empty()) {
                std::string cur;
                for (char ch : vf_grid + ',') {
                    if (ch == ',') {
                        auto eq = cur.find('=');
                        if (eq == std::string::npos)
                            throw std::invalid_argument("verify: --grid expects key=value pairs");
                        cfg.grid_filter[cur.substr(0, eq)] = cur.substr(eq + 1);
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
            }
            std::vector<std::string> sel = verify_suites;
            if (sel.size() == 1 && sel[0] == "all") sel = suite_ids();
            for (const auto &id : sel) {
                const auto &ids = suite_ids();
                if (std::find(ids.begin(), ids.end(), id) == ids.end())
                    throw std::invalid_argument("unknown suite '" + id + "'");
            }
            std::vector<CheckReport> reports = run_suite(sel, cfg);
            bool all_pass = true;
            for (const auto &r : reports) all_pass = all_pass && r.pass();

            json out;
            out["command"] = "verify";
            out["prec"] = vf_o.prec;
            out["slack"] = vf_slack;
            json jreps = json::array();
            for (const auto &r : reports) jreps.push_back(report_json(r, vf_o.prec));
            out["reports"] = jreps;
            out["all_pass"] = all_pass;

            if (!vf_golden_out.empty()) {
                std::ofstream f(vf_golden_out);
                f << out.dump(2) << "\n";
            }
            if (vf_o.as_json) {
                out["elapsed_ms"] = elapsed_ms(t0);
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto &r : reports) {
                    std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << r.identity_id << "  "
                              << r.params_str() << "  residual=" << r.residual().str(4)
                              << "  budget=" << r.budget().str(4)
                              << (r.rigorous() ? "" : "  (heuristic bounds)") << "\n";
                }
                std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << " ("
                          << reports.size() << " reports, " << elapsed_ms(t0) << " ms)\n";
            }
            return all_pass ? 0 : 2;
        }
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
