#include "pellben/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pellben/benford.hpp"
#include "pellben/norm_class.hpp"
#include "pellben/orbit_seq.hpp"
#include "pellben/pell_unit.hpp"
#include "pellben/quadint.hpp"

namespace pellben {

namespace {

using ordered_json = nlohmann::ordered_json;

BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

// Small integers as JSON numbers, anything wider as decimal strings.
ordered_json json_int(const BigInt& v) {
    if (v.fits_slong_p()) {
        return ordered_json(static_cast<long>(v.get_si()));
    }
    return ordered_json(v.get_str());
}

ordered_json json_quadint(const QuadInt& q) {
    return ordered_json{{"x", q.x.get_str()}, {"y", q.y.get_str()}};
}

std::string fmt_fixed(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

struct Options {
    std::string d;
    std::string k;
    long n_terms = 1;
    int m = 1;
    std::size_t orbit = 0;
    std::string variant = "t1";
    unsigned long unit_power = 1;
    std::string component = "x";
    std::string format = "csv";
    std::string output;
    std::string from_file;
    std::string column = "x";
    std::string element;
    bool include_seeds = false;
    int threads = 1;
};

void write_output(const Options& opt, std::ostream& out, const std::string& text) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + opt.output + "'");
    }
    file << text;
}

std::string run_unit(const Options& opt) {
    Radicand d(parse_bigint(opt.d));
    CFExpansion cf = cf_sqrt(d);
    FundamentalUnit unit = fundamental_unit(d);
    ordered_json j;
    j["d"] = json_int(d.value());
    j["a0"] = json_int(cf.a0);
    j["period"] = ordered_json::array();
    for (const BigInt& a : cf.period) {
        j["period"].push_back(json_int(a));
    }
    j["unit"] = json_quadint(unit.value);
    return j.dump() + "\n";
}

std::string run_orbits(const Options& opt) {
    Radicand d(parse_bigint(opt.d));
    BigInt k = parse_bigint(opt.k);
    OrbitPartition partition = orbit_partition(d, k, opt.threads);
    if (partition.fundamentals.empty()) {
        throw std::domain_error("norm class empty");
    }
    ordered_json j;
    j["d"] = json_int(d.value());
    j["k"] = json_int(k);
    j["orbits"] = ordered_json::array();
    for (const auto& fund : partition.fundamentals) {
        ordered_json o;
        o["x"] = fund.value.x.get_str();
        o["y"] = fund.value.y.get_str();
        o["ambiguous"] = fund.ambiguous;
        o["conjugate_of"] = static_cast<long>(*fund.conjugate_partner);
        j["orbits"].push_back(std::move(o));
    }
    return j.dump() + "\n";
}

SequenceWindow make_window(const Options& opt) {
    Radicand d(parse_bigint(opt.d));
    BigInt k = parse_bigint(opt.k);
    OrbitPartition partition = orbit_partition(d, k, opt.threads);
    if (partition.fundamentals.empty()) {
        throw std::domain_error("norm class empty");
    }
    if (opt.orbit >= partition.fundamentals.size()) {
        std::ostringstream msg;
        msg << "orbit index " << opt.orbit << " out of range (partition has "
            << partition.fundamentals.size() << " orbits)";
        throw std::domain_error(msg.str());
    }
    QuadInt multiplier = pow(fundamental_unit(d).value, opt.unit_power);
    SequenceSpec spec{partition.fundamentals[opt.orbit].value, std::move(multiplier),
                      variant_from_name(opt.variant)};
    return generate(spec, static_cast<std::size_t>(opt.n_terms));
}

std::string run_seq(const Options& opt) {
    SequenceWindow window = make_window(opt);
    std::ostringstream os;
    os << "n,x,y\n";
    for (std::size_t i = 0; i < window.terms.size(); ++i) {
        os << (i + 1) << ',' << window.terms[i].x.get_str() << ','
           << window.terms[i].y.get_str() << '\n';
    }
    return os.str();
}

std::vector<QuadInt> make_enumeration(const Options& opt) {
    Radicand d(parse_bigint(opt.d));
    BigInt k = parse_bigint(opt.k);
    FundamentalUnit unit = fundamental_unit(d);
    return enumerate_norm_class(d, k, static_cast<std::size_t>(opt.n_terms), unit,
                                opt.include_seeds, opt.threads);
}

std::string run_enumerate(const Options& opt) {
    std::vector<QuadInt> terms = make_enumeration(opt);
    std::ostringstream os;
    os << "m,X,Y\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        os << (i + 1) << ',' << terms[i].x.get_str() << ',' << terms[i].y.get_str() << '\n';
    }
    return os.str();
}

std::vector<BigInt> read_column_csv(const std::string& path, const std::string& column) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        return fields;
    };
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    };

    std::string line;
    if (!std::getline(file, line)) {
        throw std::runtime_error("empty input file '" + path + "'");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    std::vector<std::string> header = split(line);
    std::size_t col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (lower(header[i]) == lower(column)) {
            col = i;
            break;
        }
    }
    if (col == header.size()) {
        throw std::runtime_error("column '" + column + "' not found in '" + path + "'");
    }

    std::vector<BigInt> values;
    std::size_t lineno = 1;
    while (std::getline(file, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split(line);
        if (fields.size() <= col) {
            std::ostringstream msg;
            msg << "line " << lineno << " of '" << path << "' has too few fields";
            throw std::runtime_error(msg.str());
        }
        try {
            values.push_back(parse_bigint(fields[col]));
        } catch (const std::invalid_argument&) {
            std::ostringstream msg;
            msg << "line " << lineno << " of '" << path << "': not an integer";
            throw std::runtime_error(msg.str());
        }
    }
    return values;
}

// Terms that are zero or shorter than the pattern length carry no
// leading-digit block of length m and are skipped; the report's N
// counts the surviving terms.
std::vector<BigInt> filter_terms(std::vector<BigInt> terms, int m) {
    BigInt threshold = 1;
    for (int j = 1; j < m; ++j) {
        threshold *= 10;
    }
    std::vector<BigInt> kept;
    kept.reserve(terms.size());
    for (BigInt& t : terms) {
        if (t == 0 || abs(t) < threshold) {
            continue;
        }
        kept.push_back(std::move(t));
    }
    return kept;
}

std::string format_report(const BenfordReport& report, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j["n"] = report.total;
        j["m"] = report.stats.m;
        j["rows"] = ordered_json::array();
        for (const auto& [pattern, expected] : report.expected) {
            auto it = report.stats.counts.find(pattern);
            long count = (it == report.stats.counts.end()) ? 0 : it->second;
            double freq = static_cast<double>(count) / static_cast<double>(report.total);
            ordered_json row;
            row["pattern"] = std::to_string(pattern);
            row["count"] = count;
            row["frequency"] = freq;
            row["expected"] = expected;
            row["deviation"] = freq - expected;
            j["rows"].push_back(std::move(row));
        }
        j["max_abs_dev"] = report.max_abs_deviation;
        j["chi_square"] = report.chi_square;
        j["star_discrepancy"] = report.star_discrepancy;
        return j.dump() + "\n";
    }

    std::ostringstream os;
    os << "pattern,count,frequency,expected,deviation\n";
    for (const auto& [pattern, expected] : report.expected) {
        auto it = report.stats.counts.find(pattern);
        long count = (it == report.stats.counts.end()) ? 0 : it->second;
        double freq = static_cast<double>(count) / static_cast<double>(report.total);
        os << pattern << ',' << count << ',' << fmt_fixed(freq, 8) << ','
           << fmt_fixed(expected, 8) << ',' << fmt_fixed(freq - expected, 8) << '\n';
    }
    os << "N,max_abs_dev,chi_square,star_discrepancy\n";
    os << report.total << ',' << fmt_fixed(report.max_abs_deviation, 8) << ','
       << fmt_fixed(report.chi_square, 6) << ',' << fmt_fixed(report.star_discrepancy, 8)
       << '\n';
    return os.str();
}

std::string run_benford(const Options& opt, bool orbit_given) {
    std::vector<BigInt> terms;
    if (!opt.from_file.empty()) {
        terms = read_column_csv(opt.from_file, opt.column);
    } else {
        std::vector<QuadInt> elements;
        if (orbit_given) {
            elements = make_window(opt).terms;
        } else {
            elements = make_enumeration(opt);
        }
        const bool want_x = (opt.component == "x");
        terms.reserve(elements.size());
        for (const QuadInt& e : elements) {
            terms.push_back(want_x ? e.x : e.y);
        }
    }
    terms = filter_terms(std::move(terms), opt.m);
    if (terms.empty()) {
        throw std::domain_error("no usable terms after filtering");
    }
    return format_report(benford_report(terms, opt.m), opt.format);
}

std::string run_roots_check(const Options& opt) {
    std::optional<QuadInt> element;
    if (!opt.element.empty()) {
        element = parse_quadint(opt.element);
    } else {
        Radicand d(parse_bigint(opt.d));
        element = pow(fundamental_unit(d).value, opt.unit_power);
    }
    bool ok = check_characteristic_roots(*element);
    ordered_json j;
    j["unit"] = json_quadint(*element);
    j["ok"] = ok;
    return j.dump() + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brahmagupta equation x^2 - D y^2 = k: orbit structure and Benford statistics"};
    app.require_subcommand(1);

    Options opt;

    auto* unit_cmd = app.add_subcommand("unit", "Fundamental unit and CF period of sqrt(D)");
    unit_cmd->add_option("D", opt.d, "radicand (>= 2, nonsquare)")->required();
    unit_cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");

    auto* orbits_cmd = app.add_subcommand("orbits", "Orbit fundamentals of the norm class");
    orbits_cmd->add_option("D", opt.d, "radicand")->required();
    orbits_cmd->add_option("k", opt.k, "nonzero norm")->required();
    orbits_cmd->add_option("--threads", opt.threads, "parallel box-scan threads")
        ->check(CLI::PositiveNumber);
    orbits_cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");

    auto* seq_cmd = app.add_subcommand("seq", "One canonical orbit sequence as CSV n,x,y");
    seq_cmd->add_option("D", opt.d, "radicand")->required();
    seq_cmd->add_option("k", opt.k, "nonzero norm")->required();
    seq_cmd->add_option("-N,--terms", opt.n_terms, "number of terms")
        ->required()
        ->check(CLI::PositiveNumber);
    seq_cmd->add_option("--orbit", opt.orbit, "orbit index within the partition");
    seq_cmd->add_option("--variant", opt.variant, "canonical sequence variant")
        ->check(CLI::IsMember({"t1", "t2", "t3", "t4"}));
    seq_cmd->add_option("--unit-power", opt.unit_power, "power of the fundamental unit to use")
        ->check(CLI::PositiveNumber);
    seq_cmd->add_option("--threads", opt.threads, "parallel box-scan threads")
        ->check(CLI::PositiveNumber);
    seq_cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");

    auto* enum_cmd = app.add_subcommand("enumerate", "Interleaved norm-class enumeration as CSV m,X,Y");
    enum_cmd->add_option("D", opt.d, "radicand")->required();
    enum_cmd->add_option("k", opt.k, "nonzero norm")->required();
    enum_cmd->add_option("-N,--terms", opt.n_terms, "terms per canonical window")
        ->required()
        ->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--include-seeds", opt.include_seeds,
                       "prepend each orbit's fundamental and its negative");
    enum_cmd->add_option("--threads", opt.threads, "parallel box-scan threads")
        ->check(CLI::PositiveNumber);
    enum_cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");

    auto* benford_cmd = app.add_subcommand(
        "benford", "Leading-digit statistics of a generated or file-provided sequence");
    benford_cmd->add_option("D", opt.d, "radicand");
    benford_cmd->add_option("k", opt.k, "nonzero norm");
    auto* benford_n_opt =
        benford_cmd->add_option("-N,--terms", opt.n_terms, "terms per canonical window")
            ->check(CLI::PositiveNumber);
    benford_cmd->add_option("-m,--pattern-length", opt.m, "leading-digit block length")
        ->check(CLI::Range(1, 3));
    auto* orbit_opt = benford_cmd->add_option("--orbit", opt.orbit,
                                              "restrict to one orbit (with --variant)");
    benford_cmd->add_option("--variant", opt.variant, "canonical sequence variant")
        ->check(CLI::IsMember({"t1", "t2", "t3", "t4"}));
    benford_cmd->add_option("--unit-power", opt.unit_power, "power of the fundamental unit")
        ->check(CLI::PositiveNumber);
    benford_cmd->add_option("--component", opt.component, "which integer stream to analyze")
        ->check(CLI::IsMember({"x", "y"}));
    benford_cmd->add_flag("--include-seeds", opt.include_seeds,
                          "prepend each orbit's fundamental and its negative");
    benford_cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* from_file_opt = benford_cmd->add_option(
        "--from-file", opt.from_file, "read terms from a CSV file instead of generating");
    benford_cmd->add_option("--column", opt.column, "CSV column to read with --from-file");
    benford_cmd->add_option("--threads", opt.threads, "parallel box-scan threads")
        ->check(CLI::PositiveNumber);
    benford_cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");

    auto* roots_cmd = app.add_subcommand(
        "roots-check", "Verify the characteristic roots of the recurrence are not +-10^m");
    roots_cmd->add_option("D", opt.d, "radicand (uses its fundamental unit)");
    roots_cmd->add_option("--unit-power", opt.unit_power, "power of the fundamental unit")
        ->check(CLI::PositiveNumber);
    roots_cmd->add_option("--element", opt.element, "explicit unit as 'x+y*sqrt(D)'");
    roots_cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        std::string text;
        if (unit_cmd->parsed()) {
            text = run_unit(opt);
        } else if (orbits_cmd->parsed()) {
            text = run_orbits(opt);
        } else if (seq_cmd->parsed()) {
            text = run_seq(opt);
        } else if (enum_cmd->parsed()) {
            text = run_enumerate(opt);
        } else if (benford_cmd->parsed()) {
            if (opt.from_file.empty() &&
                (opt.d.empty() || opt.k.empty() || benford_n_opt->empty())) {
                err << "error: benford needs D, k and -N, or --from-file\n";
                return 2;
            }
            if (!from_file_opt->empty() && !opt.d.empty()) {
                err << "error: benford takes either D k or --from-file, not both\n";
                return 2;
            }
            text = run_benford(opt, !orbit_opt->empty());
        } else if (roots_cmd->parsed()) {
            if (opt.d.empty() && opt.element.empty()) {
                err << "error: roots-check needs D or --element\n";
                return 2;
            }
            text = run_roots_check(opt);
        }
        write_output(opt, out, text);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace pellben
