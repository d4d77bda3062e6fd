#include "eqbilliards/cli.hpp"

#include "eqbilliards/billiard.hpp"
#include "eqbilliards/counting.hpp"
#include "eqbilliards/orbits.hpp"
#include "eqbilliards/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace eqbilliards::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

const std::map<std::string, Format> kFormats{
    {"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string labels_str(const std::vector<int>& labels) {
    std::string s;
    for (int l : labels) s += static_cast<char>('0' + l);
    return s;
}

std::string angle_tan_sq(const ExactAngle& a) { return a.is_right() ? "inf" : a.tan_squared().str(); }

ordered_json angle_json(const ExactAngle& a) {
    return {{"tan_sq", angle_tan_sq(a)}, {"deg", std::stod(fixed(a.degrees()))}};
}

std::string angle_list_human(const std::vector<ExactAngle>& angles) {
    std::string s = "{";
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (i) s += ", ";
        s += fixed(angles[i].degrees(), 3);
    }
    return s + "}";
}

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw UsageError(std::string(what) + " must be >= 1");
}

OrbitClass parse_class(std::int64_t x, std::int64_t y) {
    if (auto why = OrbitClass::why_invalid(x, y)) {
        throw UsageError("(" + std::to_string(x) + "," + std::to_string(y) + ") is not an orbit class: " + *why);
    }
    return {x, y};
}

// --- count ----------------------------------------------------------------

int cmd_count(std::int64_t n, bool primitive, Format fmt, std::ostream& out) {
    require_positive(n, "n");
    const std::int64_t value = primitive ? count_primitive(n) : count_classes(n);
    const char* name = primitive ? "P" : "O";
    switch (fmt) {
        case Format::Human:
            out << name << "(" << n << ")=" << value << "\n";
            break;
        case Format::Csv:
            out << "n," << name << "\n" << n << "," << value << "\n";
            break;
        case Format::Json:
            out << ordered_json{{"command", "count"},
                                {"results", {{{"n", n}, {name, value}}}}}.dump(2)
                << "\n";
            break;
    }
    return kOk;
}

// --- table ----------------------------------------------------------------

int cmd_table(std::int64_t max_n, Format fmt, std::ostream& out) {
    require_positive(max_n, "--max");
    const auto rows = table(max_n);
    switch (fmt) {
        case Format::Human:
            out << std::setw(6) << "n" << std::setw(8) << "2n" << std::setw(8) << "O(n)" << std::setw(8)
                << "P(n)" << "\n";
            for (const auto& r : rows) {
                out << std::setw(6) << r.n << std::setw(8) << r.period << std::setw(8) << r.o << std::setw(8)
                    << r.p << "\n";
            }
            break;
        case Format::Csv:
            out << "n,period,O,P\n";
            for (const auto& r : rows) out << r.n << "," << r.period << "," << r.o << "," << r.p << "\n";
            break;
        case Format::Json: {
            ordered_json results = ordered_json::array();
            for (const auto& r : rows) {
                results.push_back({{"n", r.n}, {"period", r.period}, {"O", r.o}, {"P", r.p}});
            }
            out << ordered_json{{"command", "table"}, {"results", results}}.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

// --- enumerate ------------------------------------------------------------

int cmd_enumerate(std::int64_t n, Format fmt, std::ostream& out) {
    require_positive(n, "n");
    const auto classes = enumerate_classes(n);
    switch (fmt) {
        case Format::Human:
            if (classes.empty()) out << "no classes of period " << 2 * n << "\n";
            for (const auto& c : classes) {
                const auto dec = iterate_decomposition(c);
                const auto prof = angle_profile(c);
                out << c.str() << " period " << period(c) << " ";
                if (dec.d == 1) {
                    out << "primitive";
                } else {
                    out << "iterate d=" << dec.d << " of " << dec.base.str();
                }
                out << " angles " << angle_list_human(prof.distinct()) << " length^2 " << length_squared(c)
                    << "\n";
            }
            break;
        case Format::Csv:
            out << "x,y,period,primitive,d,base_x,base_y,kind,theta_tan_sq,theta_deg,length_sq,length\n";
            for (const auto& c : classes) {
                const auto dec = iterate_decomposition(c);
                const auto prof = angle_profile(c);
                out << c.x() << "," << c.y() << "," << period(c) << "," << (dec.d == 1 ? "true" : "false")
                    << "," << dec.d << "," << dec.base.x() << "," << dec.base.y() << "," << to_string(prof.kind)
                    << "," << angle_tan_sq(prof.theta) << "," << fixed(prof.theta.degrees()) << ","
                    << length_squared(c) << "," << fixed(length(c)) << "\n";
            }
            break;
        case Format::Json: {
            ordered_json results = ordered_json::array();
            for (const auto& c : classes) {
                const auto dec = iterate_decomposition(c);
                const auto prof = angle_profile(c);
                ordered_json distinct = ordered_json::array();
                for (const auto& a : prof.distinct()) distinct.push_back(angle_json(a));
                results.push_back({{"x", c.x()},
                                   {"y", c.y()},
                                   {"period", period(c)},
                                   {"primitive", is_primitive(c)},
                                   {"iterate", {{"d", dec.d}, {"base", {dec.base.x(), dec.base.y()}}}},
                                   {"angles",
                                    {{"kind", to_string(prof.kind)},
                                     {"theta", angle_json(prof.theta)},
                                     {"distinct", distinct}}},
                                   {"length_sq", length_squared(c).str()},
                                   {"length", std::stod(fixed(length(c)))}});
            }
            out << ordered_json{{"command", "enumerate"}, {"n", n}, {"results", results}}.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

// --- verify ---------------------------------------------------------------

ordered_json report_json(const VerificationReport& r) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    ordered_json angles = ordered_json::array();
    for (const auto& a : r.angles) angles.push_back(angle_json(a));
    return {{"x", r.orbit.x()},
            {"y", r.orbit.y()},
            {"b", r.offset.str()},
            {"status", r.passed() ? "pass" : "fail"},
            {"period", r.expected_period},
            {"bounces", r.path.bounce_count()},
            {"fundamental_period", r.path.first_return ? ordered_json(*r.path.first_return) : ordered_json()},
            {"angles", angles},
            {"labels", labels_str(r.labels)},
            {"checks", checks}};
}

struct VerifyOutcome {
    OrbitClass orbit;
    std::optional<VerificationReport> report;
    std::string vertex_error;
};

int cmd_verify(const std::vector<std::int64_t>& pos, const std::string& b_text, std::int64_t max_bounces,
               Format fmt, std::ostream& out) {
    std::vector<OrbitClass> classes;
    if (pos.size() == 1) {
        require_positive(pos[0], "n");
        classes = enumerate_classes(pos[0]);
    } else {
        classes.push_back(parse_class(pos[0], pos[1]));
    }

    VerifyOptions options;
    if (!b_text.empty()) {
        try {
            options.offset = Rational::parse(b_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--b: ") + e.what());
        }
        if (options.offset->sign() <= 0 || *options.offset >= Rational(1)) {
            throw UsageError("--b must lie strictly between 0 and 1");
        }
    }
    if (max_bounces > 0) options.max_bounces = static_cast<std::size_t>(max_bounces);

    // Classes are independent; check them concurrently and report in order.
    std::vector<std::future<VerifyOutcome>> jobs;
    for (const auto& c : classes) {
        jobs.push_back(std::async(std::launch::async, [c, options]() -> VerifyOutcome {
            try {
                return {c, verify_class(c, options), {}};
            } catch (const VertexHit& e) {
                return {c, std::nullopt, e.what()};
            }
        }));
    }
    std::vector<VerifyOutcome> outcomes;
    for (auto& j : jobs) outcomes.push_back(j.get());

    bool failed = false;
    bool singular = false;
    ordered_json results = ordered_json::array();
    if (fmt == Format::Csv) out << "x,y,b,status,period,bounces,fundamental_period,labels\n";
    for (const auto& o : outcomes) {
        if (!o.report) {
            singular = true;
            const std::string b = options.offset ? options.offset->str() : default_offset(o.orbit).str();
            switch (fmt) {
                case Format::Human:
                    out << o.orbit.str() << " b=" << b << " SINGULAR: " << o.vertex_error << "\n";
                    break;
                case Format::Csv:
                    out << o.orbit.x() << "," << o.orbit.y() << "," << b << ",vertex_hit,,,,\n";
                    break;
                case Format::Json:
                    results.push_back({{"x", o.orbit.x()},
                                       {"y", o.orbit.y()},
                                       {"b", b},
                                       {"status", "vertex_hit"},
                                       {"error", o.vertex_error}});
                    break;
            }
            continue;
        }
        const auto& r = *o.report;
        failed = failed || !r.passed();
        switch (fmt) {
            case Format::Human:
                out << r.orbit.str() << " b=" << r.offset << " " << (r.passed() ? "PASS" : "FAIL") << ": "
                    << r.path.bounce_count() << " bounces (period " << r.expected_period << "), angles "
                    << angle_list_human(r.angles) << ", labels " << labels_str(r.labels) << "\n";
                for (const auto& c : r.checks) {
                    if (!c.passed) out << "  failed " << c.name << ": " << c.detail << "\n";
                }
                break;
            case Format::Csv:
                out << r.orbit.x() << "," << r.orbit.y() << "," << r.offset << "," << (r.passed() ? "pass" : "fail")
                    << "," << r.expected_period << "," << r.path.bounce_count() << ","
                    << (r.path.first_return ? std::to_string(*r.path.first_return) : "") << ","
                    << labels_str(r.labels) << "\n";
                break;
            case Format::Json:
                results.push_back(report_json(r));
                break;
        }
    }
    if (fmt == Format::Json) {
        out << ordered_json{{"command", "verify"}, {"results", results}}.dump(2) << "\n";
    } else if (fmt == Format::Human && outcomes.empty()) {
        out << "no classes to verify\n";
    }
    if (singular) return kSingular;
    return failed ? kCheckFailed : kOk;
}

// --- fagnano --------------------------------------------------------------

int cmd_fagnano(std::int64_t k, Format fmt, std::ostream& out) {
    require_positive(k, "k");
    const BouncePath path = simulate_fagnano(k);
    const std::int64_t expected = 6 * k - 3;
    const bool all_sixty = std::all_of(path.bounces.begin(), path.bounces.end(), [](const Bounce& b) {
        return !b.incidence.is_right() && b.incidence.tan_squared() == Rational(3);
    });
    const bool ok = path.closed && path.first_return == 3u &&
                    path.bounce_count() == static_cast<std::size_t>(expected) && all_sixty;
    const std::string labels = labels_str(bounce_labels(path));
    switch (fmt) {
        case Format::Human:
            out << "gamma^" << 2 * k - 1 << ": period " << path.bounce_count() << " (6k-3=" << expected
                << "), fundamental period " << (path.first_return ? *path.first_return : 0) << ", labels "
                << labels << ", all angles 60: " << (all_sixty ? "yes" : "no") << ", "
                << (ok ? "PASS" : "FAIL") << "\n";
            break;
        case Format::Csv:
            out << "k,iterate,period,fundamental_period,labels,status\n"
                << k << "," << 2 * k - 1 << "," << path.bounce_count() << ","
                << (path.first_return ? *path.first_return : 0) << "," << labels << "," << (ok ? "pass" : "fail")
                << "\n";
            break;
        case Format::Json:
            out << ordered_json{{"command", "fagnano"},
                                {"results",
                                 {{{"k", k},
                                   {"iterate", 2 * k - 1},
                                   {"period", path.bounce_count()},
                                   {"fundamental_period", path.first_return ? *path.first_return : 0},
                                   {"labels", labels},
                                   {"all_sixty", all_sixty},
                                   {"status", ok ? "pass" : "fail"}}}}}
                       .dump(2)
                << "\n";
            break;
    }
    return ok ? kOk : kCheckFailed;
}

// --- render ---------------------------------------------------------------

int cmd_render(std::int64_t x, std::int64_t y, bool unfolded, const std::string& path, std::ostream& out,
               std::ostream& err) {
    const OrbitClass c = parse_class(x, y);
    const svg::Document doc = unfolded ? render_unfolded(c) : render_folded(c);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return kIo;
    }
    file << doc.serialize();
    file.close();
    if (!file) {
        err << "error: failed writing " << path << "\n";
        return kIo;
    }
    out << "wrote " << path << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Periodic billiard orbits on the equilateral triangle"};
    app.require_subcommand(1);

    std::string format_name = "human";
    auto add_format = [&format_name](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    };

    std::int64_t n = 0;
    bool primitive = false;
    auto* count = app.add_subcommand("count", "Number of classes of period 2n");
    count->add_option("n", n, "Half period")->required();
    count->add_flag("--primitive", primitive, "Count primitive classes only");
    add_format(count);

    std::int64_t max_n = 60;
    auto* tbl = app.add_subcommand("table", "Rows (n, 2n, O(n), P(n)) for n = 1..max");
    tbl->add_option("--max", max_n, "Largest n")->capture_default_str();
    add_format(tbl);

    auto* enumerate = app.add_subcommand("enumerate", "List the classes of period 2n");
    enumerate->add_option("n", n, "Half period")->required();
    add_format(enumerate);

    std::vector<std::int64_t> verify_args;
    std::string b_text;
    std::int64_t max_bounces = 0;
    auto* verify = app.add_subcommand("verify", "Check classes against the bounce simulator");
    verify->add_option("args", verify_args, "n (all classes of period 2n) or x y")->required()->expected(1, 2);
    verify->add_option("--b", b_text, "Offset of O along BC as p/q");
    verify->add_option("--max-bounces", max_bounces, "Bounce cap (default 4(x+y)+8)");
    add_format(verify);

    std::int64_t k = 0;
    auto* fagnano = app.add_subcommand("fagnano", "Simulate the (2k-1)-fold Fagnano orbit");
    fagnano->add_option("k", k, "Iterate index")->required();
    add_format(fagnano);

    std::vector<std::int64_t> render_xy;
    bool unfolded = false;
    std::string out_path;
    auto* render = app.add_subcommand("render", "Write an SVG figure of a class");
    render->add_option("xy", render_xy, "Lattice point x y")->required()->expected(2);
    render->add_flag("--unfolded", unfolded, "Draw the unfolding across the tessellation");
    render->add_option("--out", out_path, "Output SVG file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const Format fmt = kFormats.at(format_name);
    try {
        if (count->parsed()) return cmd_count(n, primitive, fmt, out);
        if (tbl->parsed()) return cmd_table(max_n, fmt, out);
        if (enumerate->parsed()) return cmd_enumerate(n, fmt, out);
        if (verify->parsed()) return cmd_verify(verify_args, b_text, max_bounces, fmt, out);
        if (fagnano->parsed()) return cmd_fagnano(k, fmt, out);
        if (render->parsed()) return cmd_render(render_xy[0], render_xy[1], unfolded, out_path, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace eqbilliards::cli
