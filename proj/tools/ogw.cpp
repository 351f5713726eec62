// ogw: exact tableau combinatorics and Wronskian Schubert calculus for the
// odd orthogonal Grassmannian, with built-in verification suites.
//
// Exit codes: 0 success / true, 1 false / verification failure, 2 usage or
// input error. Identical argv and seed give byte-identical stdout; timings
// go to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ogw/jdt.hpp"
#include "ogw/lr.hpp"
#include "ogw/partition.hpp"
#include "ogw/poly.hpp"
#include "ogw/tableau.hpp"
#include "ogw/verify.hpp"
#include "ogw/wronski.hpp"

using json = nlohmann::json;
using namespace ogw;

namespace {

bool g_json = false;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json base(const std::string& verb) { return json{{"schema", 1}, {"verb", verb}}; }

int emit_bool(const std::string& verb, bool value) {
    if (g_json) {
        json j = base(verb);
        j["value"] = value;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (value ? "true" : "false") << "\n";
    }
    return value ? 0 : 1;
}

int emit_scalar(const std::string& verb, const std::string& value) {
    if (g_json) {
        json j = base(verb);
        j["value"] = value;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

int emit_text(const std::string& verb, const std::string& key, const std::string& text) {
    if (g_json) {
        json j = base(verb);
        j[key] = text;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int emit_report(const RunReport& report) {
    if (g_json) {
        json j = base("verify");
        j["suite"] = report.suite;
        j["ok"] = report.ok();
        j["attempted"] = report.attempted();
        j["passed"] = report.passed();
        json crits = json::array();
        for (const auto& c : report.criteria)
            crits.push_back(json{{"id", c.id},
                                 {"name", c.name},
                                 {"attempted", c.attempted},
                                 {"passed", c.passed},
                                 {"ok", c.ok()},
                                 {"first_failure", c.first_failure}});
        j["criteria"] = crits;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : report.criteria) {
            std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << c.id << " " << c.name
                      << "  checks=" << c.attempted << " passed=" << c.passed;
            if (!c.first_failure.empty()) std::cout << "  first failure: " << c.first_failure;
            std::cout << "\n";
        }
        std::cout << (report.ok() ? "PASS" : "FAIL") << "  " << report.suite << ": "
                  << report.passed() << "/" << report.attempted() << " checks\n";
    }
    std::cerr << "wall time: " << report.seconds << "s\n";
    return report.ok() ? 0 : 1;
}

SkewShape make_shape(const std::string& outer, const std::string& inner, bool shifted) {
    if (shifted)
        return SkewShape(StrictPartition::parse(outer), StrictPartition::parse(inner));
    return SkewShape(Partition::parse(outer), Partition::parse(inner), false);
}

std::vector<int> parse_composition(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact jeu de taquin, Littlewood-Richardson coefficients of Gr(n,2n+1) and "
        "OG(n,2n+1), and Wronskians of polynomial subspaces.\n\n"
        "Formats:\n"
        "  partition   comma-separated parts, '-' for the empty one     4,3,1\n"
        "  tableau     one line per row, '.' for skipped grid cells,\n"
        "              optional leading header line 'shifted'           1 2 4\\n3 5 6\n"
        "  polynomial  coefficients, low degree first, exact rationals  0,1/2,0,3\n"
        "  subspace    header 'n=<rank>', then one polynomial per line\n"
        "  point       rational number or 'inf'                         -7/3\n"
        "  files       a path, or '-' for standard input\n"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "structured output with a schema field");

    int rc = 0;
    auto run = [&rc](auto fn) {
        return [&rc, fn]() {
            try {
                rc = fn();
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                rc = 2;
            }
        };
    };

    // ---- shape verbs ------------------------------------------------------
    auto* shape = app.add_subcommand("shape", "partition operations");
    shape->require_subcommand(1);

    auto* conj = shape->add_subcommand("conjugate", "transpose a partition");
    auto conj_arg = std::make_shared<std::string>();
    conj->add_option("partition", *conj_arg, "partition, e.g. 4,3,1")->required();
    conj->callback(run([conj_arg] {
        return emit_scalar("shape-conjugate", conjugate(Partition::parse(*conj_arg)).str());
    }));

    auto* cont = shape->add_subcommand("contains", "componentwise containment");
    auto cont_args = std::make_shared<std::pair<std::string, std::string>>();
    cont->add_option("outer", cont_args->first)->required();
    cont->add_option("inner", cont_args->second)->required();
    cont->callback(run([cont_args] {
        return emit_bool("shape-contains", contains(Partition::parse(cont_args->first),
                                                    Partition::parse(cont_args->second)));
    }));

    struct ShapeDouble {
        std::string sigma;
        int n = 0;
    };
    auto* sdbl = shape->add_subcommand("double",
                                       "partition gluing a shifted diagram to its transpose");
    auto sdbl_args = std::make_shared<ShapeDouble>();
    sdbl->add_option("sigma", sdbl_args->sigma, "strict partition")->required();
    sdbl->add_option("-n,--rank", sdbl_args->n, "ambient rank (defaults to the largest part)");
    sdbl->callback(run([sdbl_args] {
        StrictPartition s = StrictPartition::parse(sdbl_args->sigma);
        Partition d = sdbl_args->n > 0 ? doubled_shape(s, sdbl_args->n) : doubled_shape(s);
        return emit_scalar("shape-double", d.str());
    }));

    // ---- counting and enumeration ----------------------------------------
    struct CountArgs {
        std::string kind, outer, inner = "-";
        bool shifted = false;
    };
    auto* count = app.add_subcommand("count", "number of standard fillings");
    auto count_args = std::make_shared<CountArgs>();
    count->add_option("kind", count_args->kind, "syt or sst")
        ->required()
        ->check(CLI::IsMember({"syt", "sst"}));
    count->add_option("outer", count_args->outer)->required();
    count->add_option("--inner", count_args->inner, "inner shape for skew counting");
    count->add_flag("--shifted", count_args->shifted, "shifted grid (implied by sst)");
    count->callback(run([count_args] {
        bool shifted = count_args->shifted || count_args->kind == "sst";
        SkewShape s = make_shape(count_args->outer, count_args->inner, shifted);
        Int c = shifted ? count_sst(s) : count_syt(s);
        return emit_scalar("count", c.str());
    }));

    struct EnumArgs {
        std::string outer, inner = "-";
        bool shifted = false;
        int cap = kEnumerationCap;
    };
    auto* enumerate = app.add_subcommand("enumerate", "list all standard fillings");
    auto enum_args = std::make_shared<EnumArgs>();
    enumerate->add_option("outer", enum_args->outer)->required();
    enumerate->add_option("--inner", enum_args->inner);
    enumerate->add_flag("--shifted", enum_args->shifted);
    enumerate->add_option("--cap", enum_args->cap, "enumeration cap in cells");
    enumerate->callback(run([enum_args] {
        auto all = enumerate_standard(
            make_shape(enum_args->outer, enum_args->inner, enum_args->shifted), enum_args->cap);
        if (g_json) {
            json j = base("enumerate");
            j["count"] = all.size();
            json items = json::array();
            for (const Tableau& t : all) items.push_back(tableau_str(t));
            j["tableaux"] = items;
            std::cout << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < all.size(); ++i)
                std::cout << (i ? "\n" : "") << tableau_str(all[i]);
        }
        return 0;
    }));

    // ---- tableau verbs ----------------------------------------------------
    auto add_file_verb = [&](const std::string& name, const std::string& help, auto fn) {
        auto* cmd = app.add_subcommand(name, help);
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file, "tableau file, or '-' for stdin")->required();
        cmd->callback(run([file, fn] { return fn(parse_tableau(slurp(*file))); }));
        return cmd;
    };

    add_file_verb("symmetrical", "test the pairwise coordinate symmetry", [](const Tableau& t) {
        return emit_bool("symmetrical", is_symmetrical(t));
    });
    add_file_verb("double", "shifted tableau to its symmetrical plain form", [](const Tableau& t) {
        return emit_text("double", "tableau", tableau_str(doubled(t)));
    });
    add_file_verb("undouble", "symmetrical plain tableau to its shifted form",
                  [](const Tableau& t) {
                      return emit_text("undouble", "tableau", tableau_str(undoubled(t)));
                  });

    struct SubArgs {
        std::string file;
        int lo = 0, hi = 0;
    };
    auto* subt = app.add_subcommand("subtableau", "restriction to an entry interval");
    auto sub_args = std::make_shared<SubArgs>();
    subt->add_option("file", sub_args->file)->required();
    subt->add_option("lo", sub_args->lo)->required();
    subt->add_option("hi", sub_args->hi)->required();
    subt->callback(run([sub_args] {
        Tableau t = parse_tableau(slurp(sub_args->file));
        return emit_text("subtableau", "tableau",
                         tableau_str(t.subtableau(sub_args->lo, sub_args->hi)));
    }));

    // ---- jeu de taquin ----------------------------------------------------
    struct RectifyArgs {
        std::string file;
        bool shape_only = false;
    };
    auto* rect = app.add_subcommand("rectify", "slide a skew tableau to a straight one");
    auto rect_args = std::make_shared<RectifyArgs>();
    rect->add_option("file", rect_args->file)->required();
    rect->add_flag("--shape", rect_args->shape_only, "print only the rectification shape");
    rect->callback(run([rect_args] {
        Tableau t = parse_tableau(slurp(rect_args->file));
        if (rect_args->shape_only)
            return emit_scalar("rectification-shape", rectification_shape(t).str());
        return emit_text("rectify", "tableau", tableau_str(rectify(t)));
    }));

    struct SwitchArgs {
        std::string inner_file, outer_file;
    };
    auto* sw = app.add_subcommand("switch", "exchange an inner and an outer tableau");
    auto sw_args = std::make_shared<SwitchArgs>();
    sw->add_option("inner", sw_args->inner_file, "straight tableau file")->required();
    sw->add_option("outer", sw_args->outer_file, "skew tableau file")->required();
    sw->callback(run([sw_args] {
        Tableau u = parse_tableau(slurp(sw_args->inner_file));
        Tableau t = parse_tableau(slurp(sw_args->outer_file));
        SwitchResult r = switch_tableaux(u, t);
        if (g_json) {
            json j = base("switch");
            j["inner"] = tableau_str(r.inner);
            j["outer"] = tableau_str(r.outer);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << tableau_str(r.inner) << "\n" << tableau_str(r.outer);
        }
        return 0;
    }));

    struct DualEqArgs {
        std::string a, b;
        bool all_u = false;
    };
    auto* deq = app.add_subcommand("dual-equal", "test dual equivalence of two tableaux");
    auto deq_args = std::make_shared<DualEqArgs>();
    deq->add_option("first", deq_args->a)->required();
    deq->add_option("second", deq_args->b)->required();
    deq->add_flag("--verify-all-u", deq_args->all_u, "check every inner tableau");
    deq->callback(run([deq_args] {
        Tableau a = parse_tableau(slurp(deq_args->a));
        Tableau b = parse_tableau(slurp(deq_args->b));
        return emit_bool("dual-equal", dual_equivalent(a, b, deq_args->all_u));
    }));

    struct ClassArgs {
        std::string outer, inner = "-";
        bool shifted = false, all_u = false;
        int cap = kEnumerationCap;
    };
    auto* dcl = app.add_subcommand("dual-classes", "dual-equivalence classes of a shape");
    auto dcl_args = std::make_shared<ClassArgs>();
    dcl->add_option("outer", dcl_args->outer)->required();
    dcl->add_option("--inner", dcl_args->inner);
    dcl->add_flag("--shifted", dcl_args->shifted);
    dcl->add_flag("--verify-all-u", dcl_args->all_u, "re-check classes against every inner tableau");
    dcl->add_option("--cap", dcl_args->cap);
    dcl->callback(run([dcl_args] {
        SkewShape shape = make_shape(dcl_args->outer, dcl_args->inner, dcl_args->shifted);
        auto classes = dual_classes(shape, dcl_args->cap);
        if (dcl_args->all_u) {
            for (const auto& cls : classes)
                for (std::size_t i = 1; i < cls.members.size(); ++i)
                    if (!dual_equivalent(cls.members[0], cls.members[i], true))
                        throw std::logic_error("class disagreement under --verify-all-u");
        }
        if (g_json) {
            json j = base("dual-classes");
            j["count"] = classes.size();
            json arr = json::array();
            for (const auto& cls : classes) {
                json c;
                c["rectification_shape"] = cls.rect_shape.str();
                json members = json::array();
                for (const Tableau& t : cls.members) members.push_back(tableau_str(t));
                c["members"] = members;
                arr.push_back(c);
            }
            j["classes"] = arr;
            std::cout << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < classes.size(); ++i) {
                std::cout << "class " << i + 1 << " of " << classes.size() << " (rectification "
                          << classes[i].rect_shape.str() << ", " << classes[i].members.size()
                          << " tableaux)\n";
                for (const Tableau& t : classes[i].members) std::cout << tableau_str(t) << "\n";
            }
        }
        return 0;
    }));

    // ---- Littlewood-Richardson --------------------------------------------
    auto* lrcmd = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    lrcmd->require_subcommand(1);

    struct LrArgs {
        std::string a, b, target;
        int n = 0;
        bool oracle = false;
    };
    auto* lrgr = lrcmd->add_subcommand("gr", "plain Grassmannian coefficient");
    auto lrgr_args = std::make_shared<LrArgs>();
    lrgr->add_option("lambda", lrgr_args->a)->required();
    lrgr->add_option("mu", lrgr_args->b)->required();
    lrgr->add_option("nu", lrgr_args->target)->required();
    lrgr->add_option("-n,--rank", lrgr_args->n, "bounding box rank");
    lrgr->add_flag("--oracle", lrgr_args->oracle, "use the lattice-word rule");
    lrgr->callback(run([lrgr_args] {
        LrTable lr;
        LrQuery q{LrQuery::Kind::grassmannian, Partition::parse(lrgr_args->a),
                  Partition::parse(lrgr_args->b), Partition::parse(lrgr_args->target),
                  lrgr_args->n > 0 ? std::optional<int>(lrgr_args->n) : std::nullopt};
        return emit_scalar("lr-gr", std::to_string(lr.run(q, lrgr_args->oracle)));
    }));

    auto* lrog = lrcmd->add_subcommand("og", "orthogonal Grassmannian coefficient");
    auto lrog_args = std::make_shared<LrArgs>();
    lrog->add_option("sigma", lrog_args->a)->required();
    lrog->add_option("tau", lrog_args->b)->required();
    lrog->add_option("kappa", lrog_args->target)->required();
    lrog->add_option("-n,--rank", lrog_args->n, "ambient rank")->required();
    lrog->add_flag("--oracle", lrog_args->oracle, "use the P-function expansion");
    lrog->callback(run([lrog_args] {
        LrTable lr;
        LrQuery q{LrQuery::Kind::orthogonal, Partition::parse(lrog_args->a),
                  Partition::parse(lrog_args->b), Partition::parse(lrog_args->target),
                  lrog_args->n};
        return emit_scalar("lr-og", std::to_string(lr.run(q, lrog_args->oracle)));
    }));

    struct PieriArgs {
        int n = 0;
    };
    auto* pieri = lrcmd->add_subcommand("pieri", "box-power coefficients vs tableau counts");
    auto pieri_args = std::make_shared<PieriArgs>();
    pieri->add_option("-n,--rank", pieri_args->n)->required();
    pieri->callback(run([pieri_args] {
        LrTable lr;
        auto table = lr.pieri_power_table(pieri_args->n);
        if (g_json) {
            json j = base("lr-pieri");
            json rows = json::array();
            for (const auto& [sigma, coeff] : table)
                rows.push_back(json{{"sigma", sigma.str()},
                                    {"coefficient", coeff},
                                    {"tableau_count", count_sst(sigma).str()}});
            j["rows"] = rows;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "sigma\tcoefficient\ttableau_count\n";
            for (const auto& [sigma, coeff] : table)
                std::cout << sigma.str() << "\t" << coeff << "\t" << count_sst(sigma).str()
                          << "\n";
        }
        return 0;
    }));

    struct DualArgs {
        std::string kappa;
        int n = 0;
    };
    auto* lrdual = lrcmd->add_subcommand("dual", "strict partition pairing to one");
    auto lrdual_args = std::make_shared<DualArgs>();
    lrdual->add_option("kappa", lrdual_args->kappa)->required();
    lrdual->add_option("-n,--rank", lrdual_args->n)->required();
    lrdual->callback(run([lrdual_args] {
        LrTable lr;
        StrictPartition d =
            lr.poincare_dual(StrictPartition::parse(lrdual_args->kappa), lrdual_args->n);
        return emit_scalar("lr-dual", d.str());
    }));

    struct SegArgs {
        std::string comp;
        int n = 0;
    };
    auto* seg = lrcmd->add_subcommand("segments", "segment-wise dual-equivalence class count");
    auto seg_args = std::make_shared<SegArgs>();
    seg->add_option("composition", seg_args->comp, "comma-separated positive parts")->required();
    seg->add_option("-n,--rank", seg_args->n)->required();
    seg->callback(run([seg_args] {
        LrTable lr;
        long long c = lr.segment_class_count(parse_composition(seg_args->comp), seg_args->n);
        return emit_scalar("lr-segments", std::to_string(c));
    }));

    // ---- Wronskian geometry ------------------------------------------------
    auto* wr = app.add_subcommand("wronskian", "monic Wronskian of a subspace");
    auto wr_file = std::make_shared<std::string>();
    wr->add_option("file", *wr_file, "subspace file, or '-'")->required();
    wr->callback(run([wr_file] {
        Subspace x = parse_subspace(slurp(*wr_file));
        return emit_scalar("wronskian", wronskian(x).str());
    }));

    auto* iso = app.add_subcommand("isotropic", "test isotropy for the ambient pairing");
    auto iso_file = std::make_shared<std::string>();
    iso->add_option("file", *iso_file)->required();
    iso->callback(run([iso_file] {
        return emit_bool("isotropic", is_isotropic(parse_subspace(slurp(*iso_file))));
    }));

    auto* sch = app.add_subcommand("schubert", "Schubert variety membership");
    sch->require_subcommand(1);
    struct SchArgs {
        std::string file, shape, point;
    };
    auto* schgr = sch->add_subcommand("gr", "plain membership");
    auto schgr_args = std::make_shared<SchArgs>();
    schgr->add_option("file", schgr_args->file)->required();
    schgr->add_option("lambda", schgr_args->shape)->required();
    schgr->add_option("point", schgr_args->point)->required();
    schgr->callback(run([schgr_args] {
        Subspace x = parse_subspace(slurp(schgr_args->file));
        return emit_bool("schubert-gr",
                         in_schubert_gr(x, Partition::parse(schgr_args->shape),
                                        ExtPoint::parse(schgr_args->point)));
    }));
    auto* schog = sch->add_subcommand("og", "orthogonal membership");
    auto schog_args = std::make_shared<SchArgs>();
    schog->add_option("file", schog_args->file)->required();
    schog->add_option("sigma", schog_args->shape)->required();
    schog->add_option("point", schog_args->point)->required();
    schog->callback(run([schog_args] {
        Subspace y = parse_subspace(slurp(schog_args->file));
        return emit_bool("schubert-og",
                         in_schubert_og(y, StrictPartition::parse(schog_args->shape),
                                        ExtPoint::parse(schog_args->point)));
    }));

    struct TwoFiles {
        std::string a, b;
    };
    auto* idim = app.add_subcommand("intersect-dim", "dimension of a subspace intersection");
    auto idim_args = std::make_shared<TwoFiles>();
    idim->add_option("first", idim_args->a)->required();
    idim->add_option("second", idim_args->b)->required();
    idim->callback(run([idim_args] {
        Subspace x = parse_subspace(slurp(idim_args->a));
        Subspace f = parse_subspace(slurp(idim_args->b));
        return emit_scalar("intersect-dim", std::to_string(intersect_dim(x, f)));
    }));

    struct FlagArgs {
        int i = 0, n = 0;
        std::string point;
    };
    auto* flag = app.add_subcommand("flag", "osculating flag subspace");
    auto flag_args = std::make_shared<FlagArgs>();
    flag->add_option("i", flag_args->i, "flag dimension")->required();
    flag->add_option("point", flag_args->point)->required();
    flag->add_option("-n,--rank", flag_args->n)->required();
    flag->callback(run([flag_args] {
        Subspace f = osculating_flag(flag_args->i, ExtPoint::parse(flag_args->point),
                                     flag_args->n);
        return emit_text("flag", "subspace", subspace_str(f));
    }));

    struct BilinArgs {
        std::string f, g;
        int n = 0;
    };
    auto* bil = app.add_subcommand("bilinear", "the symmetric pairing of two polynomials");
    auto bil_args = std::make_shared<BilinArgs>();
    bil->add_option("f", bil_args->f, "polynomial literal")->required();
    bil->add_option("g", bil_args->g, "polynomial literal")->required();
    bil->add_option("-n,--rank", bil_args->n)->required();
    bil->callback(run([bil_args] {
        Rat v = bilinear(RationalPoly::parse(bil_args->f), RationalPoly::parse(bil_args->g),
                         bil_args->n);
        return emit_scalar("bilinear", rational_str(v));
    }));

    struct MultArgs {
        std::string poly, point;
        int target = -1;
    };
    auto* mult = app.add_subcommand("multiplicity", "root multiplicity of a factor (z+a)");
    auto mult_args = std::make_shared<MultArgs>();
    mult->add_option("poly", mult_args->poly)->required();
    mult->add_option("point", mult_args->point)->required();
    mult->add_option("--target", mult_args->target,
                     "target degree for the deficit at infinity");
    mult->callback(run([mult_args] {
        RationalPoly p = RationalPoly::parse(mult_args->poly);
        int target = mult_args->target >= 0 ? mult_args->target : p.degree();
        int m = root_multiplicity(p, ExtPoint::parse(mult_args->point), target);
        return emit_scalar("multiplicity", std::to_string(m));
    }));

    auto* psq = app.add_subcommand("perfect-square", "test p = c q^2 by square-free splitting");
    auto psq_arg = std::make_shared<std::string>();
    psq->add_option("poly", *psq_arg)->required();
    psq->callback(run([psq_arg] {
        return emit_bool("perfect-square", is_perfect_square(RationalPoly::parse(*psq_arg)));
    }));

    struct SampleArgs {
        int n = 0;
        std::uint64_t seed = 0;
    };
    auto* samp = app.add_subcommand("sample-isotropic", "seeded random isotropic subspace");
    auto samp_args = std::make_shared<SampleArgs>();
    samp->add_option("-n,--rank", samp_args->n)->required();
    samp->add_option("--seed", samp_args->seed)->required();
    samp->callback(run([samp_args] {
        return emit_text("sample-isotropic", "subspace",
                         subspace_str(random_isotropic(samp_args->n, samp_args->seed)));
    }));

    struct DivArgs {
        std::string file, point;
    };
    auto* div = app.add_subcommand("divisibility", "multiplicity vs Schubert weight at a point");
    auto div_args = std::make_shared<DivArgs>();
    div->add_option("file", div_args->file)->required();
    div->add_option("point", div_args->point)->required();
    div->callback(run([div_args] {
        Subspace x = parse_subspace(slurp(div_args->file));
        DivisibilityReport rep = check_divisibility(x, ExtPoint::parse(div_args->point));
        if (g_json) {
            json j = base("divisibility");
            j["pass"] = rep.pass;
            j["point"] = rep.point.str();
            j["multiplicity"] = rep.multiplicity;
            j["max_gr_weight"] = rep.max_gr_weight;
            j["isotropic"] = rep.isotropic;
            if (rep.isotropic) j["max_og_weight"] = rep.max_og_weight;
            j["detail"] = rep.detail;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (rep.pass ? "pass" : "fail") << " multiplicity=" << rep.multiplicity
                      << " max_gr_weight=" << rep.max_gr_weight
                      << " isotropic=" << (rep.isotropic ? "yes" : "no");
            if (rep.isotropic) std::cout << " max_og_weight=" << rep.max_og_weight;
            if (!rep.detail.empty()) std::cout << "  " << rep.detail;
            std::cout << "\n";
        }
        return rep.pass ? 0 : 1;
    }));

    // ---- verification suites ------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "batch verification suites");
    verify_cmd->require_subcommand(1);
    struct VerifyArgs {
        int n = 2;
        int samples = 20;
        std::uint64_t seed = 42;
    };

    auto* vdiv = verify_cmd->add_subcommand("divisibility", "divisibility laws on samples");
    auto vdiv_args = std::make_shared<VerifyArgs>();
    vdiv->add_option("-n,--rank", vdiv_args->n);
    vdiv->add_option("--samples", vdiv_args->samples);
    vdiv->add_option("--seed", vdiv_args->seed);
    vdiv->callback(run([vdiv_args] {
        auto t0 = std::chrono::steady_clock::now();
        RunReport report;
        report.suite = "verify-divisibility";
        report.criteria.push_back(verify::divisibility(vdiv_args->n, vdiv_args->samples,
                                                       vdiv_args->samples, vdiv_args->seed));
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return emit_report(report);
    }));

    auto* vsq = verify_cmd->add_subcommand("square", "perfect-square law on samples");
    auto vsq_args = std::make_shared<VerifyArgs>();
    vsq->add_option("-n,--rank", vsq_args->n);
    vsq->add_option("--samples", vsq_args->samples);
    vsq->add_option("--seed", vsq_args->seed);
    vsq->callback(run([vsq_args] {
        auto t0 = std::chrono::steady_clock::now();
        RunReport report;
        report.suite = "verify-square";
        report.criteria.push_back(
            verify::perfect_squares({vsq_args->n}, vsq_args->samples, vsq_args->seed));
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return emit_report(report);
    }));

    auto* vall = verify_cmd->add_subcommand("all", "every acceptance criterion at rank scale");
    auto vall_args = std::make_shared<VerifyArgs>();
    vall->add_option("-n,--rank", vall_args->n)->required();
    vall->add_option("--seed", vall_args->seed);
    vall->callback(run([vall_args] {
        return emit_report(verify_all(vall_args->n, vall_args->seed));
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return rc;
}
