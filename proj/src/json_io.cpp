#include "initforms/json_io.hpp"

#include "initforms/parse.hpp"

namespace initforms::io {

std::string error_class_name(const Error& e) {
    if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
    if (dynamic_cast<const VarOutOfRange*>(&e)) return "VarOutOfRange";
    if (dynamic_cast<const ZNotAllowed*>(&e)) return "ZNotAllowed";
    if (dynamic_cast<const ArityMismatch*>(&e)) return "ArityMismatch";
    if (dynamic_cast<const DimMismatch*>(&e)) return "DimMismatch";
    if (dynamic_cast<const DivisionByZeroPoly*>(&e)) return "DivisionByZeroPoly";
    if (dynamic_cast<const TooManyPolys*>(&e)) return "TooManyPolys";
    if (dynamic_cast<const ZeroPolynomial*>(&e)) return "ZeroPolynomial";
    if (dynamic_cast<const EmptyList*>(&e)) return "EmptyList";
    if (dynamic_cast<const AllZero*>(&e)) return "AllZero";
    if (dynamic_cast<const EmptySet*>(&e)) return "EmptySet";
    if (dynamic_cast<const PointNotInSet*>(&e)) return "PointNotInSet";
    if (dynamic_cast<const CounitFails*>(&e)) return "CounitFails";
    if (dynamic_cast<const CoassocFails*>(&e)) return "CoassocFails";
    if (dynamic_cast<const NotLocallyNilpotent*>(&e)) return "NotLocallyNilpotent";
    if (dynamic_cast<const NotAnAutomorphismPair*>(&e)) return "NotAnAutomorphismPair";
    if (dynamic_cast<const ZeroImage*>(&e)) return "ZeroImage";
    if (dynamic_cast<const NoZTerms*>(&e)) return "NoZTerms";
    if (dynamic_cast<const StarFails*>(&e)) return "StarFails";
    if (dynamic_cast<const SNotFullRank*>(&e)) return "SNotFullRank";
    if (dynamic_cast<const EmptyInvariantList*>(&e)) return "EmptyInvariantList";
    if (dynamic_cast<const PreconditionFails*>(&e)) return "PreconditionFails";
    if (dynamic_cast<const WitnessInvalid*>(&e)) return "WitnessInvalid";
    if (dynamic_cast<const CheckFailed*>(&e)) return "CheckFailed";
    return "Error";
}

Json rational_to_json(const Rational& r) { return rat_to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw Error("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json group_elem_to_json(const GroupElem& g) {
    Json arr = Json::array();
    for (const Rational& c : g.coords()) arr.push_back(rational_to_json(c));
    return arr;
}

Json weight_to_json(const Weight& w) {
    Json arr = Json::array();
    for (const GroupElem& g : w.per_var()) arr.push_back(group_elem_to_json(g));
    return arr;
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("weight literal must be a non-empty array");
    std::vector<GroupElem> per_var;
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.empty())
            throw Error("weight entry must be a non-empty array of rationals");
        std::vector<Rational> coords;
        for (const Json& c : entry) coords.push_back(rational_from_json(c));
        per_var.emplace_back(std::move(coords));
    }
    return Weight(std::move(per_var));
}

Json exponent_to_json(const Exponent& e) {
    Json arr = Json::array();
    for (int v : e.entries()) arr.push_back(v);
    return arr;
}

Json exponents_to_json(const std::vector<Exponent>& es) {
    Json arr = Json::array();
    for (const Exponent& e : es) arr.push_back(exponent_to_json(e));
    return arr;
}

GaAction action_from_json(const Json& j) {
    int m = j.at("m").get<int>();
    std::vector<ZPoly> images;
    for (const Json& s : j.at("images")) images.push_back(parse_zpoly(s.get<std::string>(), m));
    return GaAction::make_coaction(std::move(images));
}

Json action_to_json(const GaAction& a) {
    Json out = Json::object();
    out["m"] = a.m();
    Json arr = Json::array();
    for (const ZPoly& img : a.images()) arr.push_back(format_zpoly(img));
    out["images"] = arr;
    return out;
}

LND lnd_from_json(const Json& j) {
    int m = j.at("m").get<int>();
    std::vector<Poly> images;
    for (const Json& s : j.at("d")) images.push_back(parse_poly(s.get<std::string>(), m));
    int cap = j.contains("cap") ? j.at("cap").get<int>() : 64;
    return LND::make(std::move(images), cap);
}

AlgebraHom hom_from_json(const Json& j, bool allow_z) {
    int m = j.at("m").get<int>();
    std::vector<ZPoly> images;
    for (const Json& s : j.at("images")) {
        if (allow_z)
            images.push_back(parse_zpoly(s.get<std::string>(), m));
        else
            images.push_back(ZPoly::from_poly(parse_poly(s.get<std::string>(), m)));
    }
    int n = static_cast<int>(images.size());
    return AlgebraHom(n, std::move(images));
}

namespace {

Json hom_to_json(const AlgebraHom& h) {
    Json out = Json::object();
    out["m"] = h.tgt_nvars();
    Json arr = Json::array();
    for (const ZPoly& img : h.images()) arr.push_back(format_zpoly(img));
    out["images"] = arr;
    return out;
}

}  // namespace

AutomorphismPair ap_from_json(const Json& j) {
    int m = j.at("m").get<int>();
    std::vector<Poly> f, g;
    for (const Json& s : j.at("F")) f.push_back(parse_poly(s.get<std::string>(), m));
    for (const Json& s : j.at("G")) g.push_back(parse_poly(s.get<std::string>(), m));
    return AutomorphismPair::make(std::move(f), std::move(g));
}

std::vector<Poly> polys_from_json(const Json& j, int nvars) {
    std::vector<Poly> out;
    for (const Json& s : j) out.push_back(parse_poly(s.get<std::string>(), nvars));
    return out;
}

namespace {

Json polys_to_json(const std::vector<Poly>& ps) {
    Json arr = Json::array();
    for (const Poly& p : ps) arr.push_back(format_poly(p));
    return arr;
}

int exit_code_for(Status s) {
    switch (s) {
        case Status::verified: return 0;
        case Status::failed: return 1;
        case Status::hypothesis_fails: return 2;
    }
    return 3;
}

JobResult finish(Status status, const Json& witness, const std::string& details, const Json& data,
                 const Json& reproducer) {
    Json out = Json::object();
    out["schema"] = "1";
    out["status"] = to_string(status);
    out["witness"] = witness;
    out["details"] = details;
    out["data"] = data;
    out["reproducer"] = reproducer;
    return {out, exit_code_for(status)};
}

JobResult job_prop23(const Json& job) {
    AlgebraHom psi = hom_from_json(job.at("psi"), false);
    Weight u = weight_from_json(job.at("u"));
    std::vector<Poly> fs = polys_from_json(job.at("fs"), psi.src_nvars());

    Json repro = Json::object();
    repro["check"] = "prop23";
    repro["psi"] = hom_to_json(psi);
    repro["u"] = weight_to_json(u);
    repro["fs"] = polys_to_json(fs);

    TwistData t = build_twist(psi, u);
    Json statuses = Json::array();
    Status agg = Status::verified;
    std::string details;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        CompatReport rep = check_initial_compat(t, fs[i]);
        statuses.push_back(to_string(rep.status));
        if (rep.status == Status::failed) {
            agg = Status::failed;
            details = "instance " + std::to_string(i + 1) + ": " + rep.detail;
        } else if (rep.status == Status::hypothesis_fails && agg == Status::verified) {
            agg = Status::hypothesis_fails;
            details = "instance " + std::to_string(i + 1) + ": " + rep.detail;
        }
    }
    Json data = Json::object();
    data["statuses"] = statuses;
    return finish(agg, nullptr, details, data, repro);
}

JobResult job_thm24i(const Json& job) {
    AlgebraHom psi = hom_from_json(job.at("psi"), false);
    Weight u = weight_from_json(job.at("u"));
    int l = job.at("l").get<int>();
    std::vector<Poly> fs = polys_from_json(job.at("fs"), psi.src_nvars());

    Json repro = Json::object();
    repro["check"] = "thm24i";
    repro["psi"] = hom_to_json(psi);
    repro["u"] = weight_to_json(u);
    repro["l"] = l;
    repro["fs"] = polys_to_json(fs);

    TwistData t = build_twist(psi, u);
    Status agg = Status::verified;
    std::string details;
    Json statuses = Json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        MembershipReport rep = check_initial_membership(t, l, fs[i]);
        statuses.push_back(to_string(rep.status));
        if (rep.status != Status::verified && agg == Status::verified) {
            agg = rep.status;
            details = "instance " + std::to_string(i + 1) + ": " + rep.detail;
        }
    }
    Json data = Json::object();
    data["statuses"] = statuses;
    return finish(agg, nullptr, details, data, repro);
}

JobResult job_star(const Json& job) {
    AlgebraHom phi = hom_from_json(job.at("phi"), true);
    Weight v = weight_from_json(job.at("v"));
    Weight w = weight_from_json(job.at("w"));

    Json repro = Json::object();
    repro["check"] = "star";
    repro["phi"] = hom_to_json(phi);
    repro["v"] = weight_to_json(v);
    repro["w"] = weight_to_json(w);

    StarReport rep = check_star(phi, v, w);
    Json data = Json::object();
    if (rep.status != Status::verified) {
        data["failing_clause"] = rep.failing_clause;
        data["index"] = rep.index;
    }
    return finish(rep.status, nullptr, rep.detail, data, repro);
}

JobResult job_build_u(const Json& job) {
    AlgebraHom phi = hom_from_json(job.at("phi"), true);
    Weight v = weight_from_json(job.at("v"));
    Weight w = weight_from_json(job.at("w"));

    Json repro = Json::object();
    repro["check"] = "build_u";
    repro["phi"] = hom_to_json(phi);
    repro["v"] = weight_to_json(v);
    repro["w"] = weight_to_json(w);

    PhiData pd = build_u(phi, v, w);
    Json data = Json::object();
    data["deg_v_phi"] = group_elem_to_json(pd.deg_v_phi);
    data["u"] = weight_to_json(pd.u);
    data["i0"] = pd.i0 + 1;
    data["j0"] = pd.j0;
    Json phi_u = Json::array();
    for (const ZPoly& img : pd.phi_u_images) phi_u.push_back(format_zpoly(img));
    data["phi_u"] = phi_u;
    return finish(Status::verified, nullptr, "", data, repro);
}

JobResult job_thm12(const Json& job) {
    AlgebraHom phi = hom_from_json(job.at("phi"), true);
    Weight v = weight_from_json(job.at("v"));
    Weight w = weight_from_json(job.at("w"));
    std::vector<Poly> S = polys_from_json(job.at("S"), phi.src_nvars());
    std::vector<Poly> fs = polys_from_json(job.at("fs"), phi.src_nvars());

    Json repro = Json::object();
    repro["check"] = "thm12";
    repro["phi"] = hom_to_json(phi);
    repro["v"] = weight_to_json(v);
    repro["w"] = weight_to_json(w);
    repro["S"] = polys_to_json(S);
    repro["fs"] = polys_to_json(fs);

    StarReport star = check_star(phi, v, w);
    if (star.status != Status::verified) {
        Json data = Json::object();
        data["failing_clause"] = star.failing_clause;
        return finish(Status::hypothesis_fails, nullptr, "condition (*) fails: " + star.detail, data, repro);
    }
    build_u(phi, v, w);  // exercises the proof's construction and assertions

    NonDividingReport rep = find_nondividing(phi, S, fs, w);
    Json data = Json::object();
    Json matrix = Json::array();
    for (const auto& row : rep.divides) {
        Json r = Json::array();
        for (bool b : row) r.push_back(b);
        matrix.push_back(r);
    }
    data["divides"] = matrix;
    Json witness = rep.witness ? Json(format_poly(S[*rep.witness])) : Json(nullptr);
    return finish(rep.status, witness, rep.detail, data, repro);
}

JobResult job_thm11(const Json& job) {
    GaAction a = action_from_json(job.at("action"));
    int n = job.at("n").get<int>();
    std::vector<Poly> fs = polys_from_json(job.at("fs"), n);

    Json repro = Json::object();
    repro["check"] = "thm11";
    repro["action"] = action_to_json(a);
    repro["n"] = n;
    repro["fs"] = polys_to_json(fs);

    Status agg = Status::verified;
    std::string details;
    Json offenders = Json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        IntruderReport rep = check_no_intruder_stable(fs[i], a, n);
        if (rep.status != Status::verified) {
            agg = Status::failed;
            details = "instance " + std::to_string(i + 1) + ": " + rep.detail;
            offenders.push_back(exponents_to_json(rep.offending));
        }
    }
    Json data = Json::object();
    data["offending"] = offenders;
    return finish(agg, nullptr, details, data, repro);
}

JobResult job_thm14(const Json& job) {
    AutomorphismPair ap = ap_from_json(job.at("ap"));
    int n = job.at("n").get<int>();
    std::vector<Poly> S = polys_from_json(job.at("S"), n);
    Weight w = weight_from_json(job.at("w"));
    std::vector<Poly> fs = polys_from_json(job.at("fs"), n);

    Json repro = Json::object();
    repro["check"] = "thm14";
    Json apj = Json::object();
    apj["m"] = ap.m();
    apj["F"] = polys_to_json(ap.F());
    apj["G"] = polys_to_json(ap.G());
    repro["ap"] = apj;
    repro["n"] = n;
    repro["S"] = polys_to_json(S);
    repro["w"] = weight_to_json(w);
    repro["fs"] = polys_to_json(fs);

    NonDividingReport rep = check_coords_instance(ap, n, S, w, fs);
    Json data = Json::object();
    Json matrix = Json::array();
    for (const auto& row : rep.divides) {
        Json r = Json::array();
        for (bool b : row) r.push_back(b);
        matrix.push_back(r);
    }
    data["divides"] = matrix;
    Json witness = rep.witness ? Json(format_poly(S[*rep.witness])) : Json(nullptr);
    return finish(rep.status, witness, rep.detail, data, repro);
}

}  // namespace

JobResult run_job(const Json& job) {
    try {
        std::string check = job.at("check").get<std::string>();
        if (check == "prop23") return job_prop23(job);
        if (check == "thm24i") return job_thm24i(job);
        if (check == "star") return job_star(job);
        if (check == "build_u") return job_build_u(job);
        if (check == "thm12") return job_thm12(job);
        if (check == "thm11") return job_thm11(job);
        if (check == "thm14") return job_thm14(job);
        throw Error("unknown check: " + check);
    } catch (const Error& e) {
        Json out = Json::object();
        out["schema"] = "1";
        out["status"] = "error";
        out["witness"] = nullptr;
        out["details"] = e.what();
        Json data = Json::object();
        data["error_class"] = error_class_name(e);
        out["data"] = data;
        out["reproducer"] = job;
        return {out, 3};
    } catch (const nlohmann::json::exception& e) {
        Json out = Json::object();
        out["schema"] = "1";
        out["status"] = "error";
        out["witness"] = nullptr;
        out["details"] = std::string("malformed job: ") + e.what();
        Json data = Json::object();
        data["error_class"] = "JsonError";
        out["data"] = data;
        out["reproducer"] = job;
        return {out, 3};
    }
}

}  // namespace initforms::io
