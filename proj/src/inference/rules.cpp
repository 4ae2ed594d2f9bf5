#include "mesur/inference/rules.hpp"

#include "mesur/error.hpp"
#include "mesur/ontology/vocab.hpp"

namespace mesur::inference {

namespace listings {

const std::string_view kAuthoredBy = R"(SELECT  ?a ?b
WHERE
	( ?x rdf:type mesur:Publishes )
	( ?x mesur:hasUnit ?a )
	( ?x mesur:hasAuthor ?b )

INSERT < ?a mesur:authoredBy ?b >
INSERT < ?b mesur:authored ?a > .
)";

const std::string_view kContainedIn = R"(SELECT  ?a ?b
WHERE
	( ?x rdf:type mesur:Publishes )
	( ?x mesur:hasUnit ?a )
	( ?x mesur:hasGroup ?b )

INSERT < ?a mesur:containedIn ?b >
INSERT < ?b mesur:contains ?a > .
)";

const std::string_view kPublishedBy = R"(SELECT  ?a ?b
WHERE
	( ?x rdf:type mesur:Publishes )
	( ?x mesur:hasPublisher ?a )
	( ?x mesur:hasGroup ?b )

INSERT < ?a mesur:published ?b >
INSERT < ?b mesur:publishedBy ?a > .
)";

const std::string_view kUsedBy = R"(SELECT  ?a ?b ?c
WHERE
	( ?x rdf:type mesur:Uses )
	( ?x mesur:hasDocument ?a )
	( ?a rdf:type mesur:Article )
	( ?x mesur:hasUser ?b )
	( ?y rdf:type mesur:Publishes )
	( ?y mesur:hasUnit ?a )
	( ?y mesur:hasGroup ?c )

INSERT < ?a mesur:usedBy ?b >
INSERT < ?b mesur:used ?a >
INSERT < ?c mesur:usedBy ?b >
INSERT < ?b mesur:used ?c > .
)";

// Kept as written, including the window filters that the surrounding prose
// attaches to the opposite journals (see derive_group_citation).
const std::string_view kGroupCitation = R"(SELECT  ?x
WHERE
	( ?x rdf:type mesur:Citation )
	( ?x mesur:hasSource ?a )
	( ?x mesur:hasSink ?b )
	( ?a rdf:type mesur:Article )
	( ?b rdf:type mesur:Article )
	( ?y rdf:type mesur:Publishes )
	( ?z rdf:type mesur:Publishes )
	( ?y mesur:hasTime ?t)
		AND (?t > 2004 AND ?t < 2007)
	( ?z mesur:hasTime ?u) AND ?u = 2007
	( ?y mesur:hasUnit ?a )
	( ?z mesur:hasUnit ?b )
	( ?y mesur:hasGroup ?c )
	( ?z mesur:hasGroup ?d )
	( ?c mesur:partOf urn:issn:1751-1577 )
	( ?d mesur:partOf urn:issn:0138-9130 )

INSERT < _123 rdf:type mesur:Citation >
INSERT < _123 mesur:hasSource urn:issn:1751-1577 >
INSERT < _123 mesur:hasSink urn:issn:0138-9130 >
INSERT < _123 mesur:hasWeight COUNT(?x) >
INSERT < _123 mesur:hasSourceStartTime 2007 >
INSERT < _123 mesur:hasSourceEndTime 2007 >
INSERT < _123 mesur:hasSinkStartTime 2005 >
INSERT < _123 mesur:hasSinkEndTime 2006 > .
)";

const std::string_view kCoauthor = R"(SELECT ?x
WHERE
	( ?x rdf:type mesur:Publishes )
	( ?x mesur:hasAuthor lanl:marko )
	( ?x mesur:hasAuthor lanl:herbertv )

INSERT < _123 rdf:type mesur:Coauthor >
INSERT < _123 mesur:hasSource lanl:marko >
INSERT < _123 mesur:hasSink lanl:herbertv >
INSERT < _123 mesur:hasWeight COUNT(?x) >
INSERT < _456 rdf:type mesur:Coauthor >
INSERT < _456 mesur:hasSource lanl:herbertv >
INSERT < _456 mesur:hasSink lanl:marko >
INSERT < _456 mesur:hasWeight COUNT(?x) > .
)";

const std::string_view kAffiliation = R"(SELECT  ?a ?b
WHERE
	( ?x rdf:type mesur:Affiliation )
	( ?x mesur:hasAffiliator ?a )
	( ?x mesur:hasAffiliatee ?b )

INSERT < ?a mesur:hasAffiliate ?b >
INSERT < ?b mesur:hasAffiliation ?a > .
)";

const std::string_view kImpactFactor = R"(SELECT  ?x
WHERE
	( ?x rdf:type mesur:Publishes )
	( ?x mesur:hasUnit ?a )
	( ?x mesur:hasGroup ?b )
	( ?b mesur:partOf urn:issn:1082-9873 )
	( ?x mesur:hasTime ?t ) AND
		(?t > 2004 AND ?t < 2007)
	( ?y rdf:type mesur:Citation )
	( ?y mesur:hasSource ?c )
	( ?y mesur:hasSink ?a )
	( ?z rdf:type mesur:Publishes )
	( ?z mesur:hasUnit ?c )
	( ?z mesur:hasTime ?u) AND ?u = 2007

SELECT  ?y
WHERE
	( ?y rdf:type mesur:Publishes )
	( ?y mesur:hasGroup ?a )
	( ?a mesur:partOf urn:issn:1082-9873 )
	( ?y mesur:hasTime ?t ) AND
		(?t > 2004 AND ?t < 2007)

INSERT < _123 rdf:type mesur:ImpactFactor >
INSERT < _123 mesur:hasObject urn:issn:1082-9873 >
INSERT < _123 mesur:hasStartTime 2007 >
INSERT < _123 mesur:hasEndTime 2007 >
INSERT < _123 mesur:hasNumericValue
			(COUNT(?x) / COUNT(?y)) > .
)";

const std::string_view kUsageImpactFactor = R"(SELECT  ?x
WHERE
	( ?x rdf:type mesur:Uses )
	( ?x mesur:hasDocument ?a )
	( ?x mesur:hasTime ?t ) AND ?t = 2007
	( ?y rdf:type mesur:Publishes )
	( ?y mesur:hasUnit ?a )
	( ?y mesur:hasGroup ?c )
	( ?c mesur:partOf urn:issn:1082-9873 )
	( ?y mesur:hasTime ?u ) AND
		(?u > 2004 AND ?u < 2007)

SELECT  ?y
WHERE
	( ?y rdf:type mesur:Publishes )
	( ?y mesur:hasGroup ?a )
	( ?a mesur:partOf urn:issn:1082-9873 )
	( ?y mesur:hasTime ?t ) AND
		(?t > 2004 AND ?t < 2007)

INSERT < _123 rdf:type mesur:UsageImpactFactor >
INSERT < _123 mesur:hasObject urn:issn:1082-9873 >
INSERT < _123 mesur:hasNumericValue
			(COUNT(?x) / COUNT(?y)) > .
)";

const std::vector<Listing>& all() {
    static const std::vector<Listing> items = {
        {"authored_by", kAuthoredBy},       {"contained_in", kContainedIn}, {"published_by", kPublishedBy},
        {"used_by", kUsedBy},               {"group_citation", kGroupCitation}, {"coauthor", kCoauthor},
        {"affiliation", kAffiliation},      {"impact_factor", kImpactFactor},
        {"usage_impact_factor", kUsageImpactFactor},
    };
    return items;
}

const rdf::NamespaceTable& namespaces() {
    static const rdf::NamespaceTable table = [] {
        rdf::NamespaceTable t = rdf::NamespaceTable::defaults();
        t.add("lanl", "http://www.lanl.gov/people#");
        t.add("foaf", "http://xmlns.com/foaf/0.1/");
        t.add("vub", "http://homepages.vub.ac.be/#");
        return t;
    }();
    return table;
}

}  // namespace listings

const std::vector<RuleInfo>& rule_registry() {
    using namespace vocab;
    static const std::vector<RuleInfo> rules = {
        {"authored_by", "unit authoredBy agent, agent authored unit", {std::string(kAuthoredBy), std::string(kAuthored)},
         listings::kAuthoredBy},
        {"contained_in", "unit containedIn group, group contains unit",
         {std::string(kContainedIn), std::string(kContains)}, listings::kContainedIn},
        {"published_by", "publisher published group, group publishedBy publisher",
         {std::string(kPublished), std::string(kPublishedBy)}, listings::kPublishedBy},
        {"used_by", "article and its group usedBy user, user used both", {std::string(kUsedBy), std::string(kUsed)},
         listings::kUsedBy},
        {"affiliation", "affiliator hasAffiliate affiliatee and the inverse",
         {std::string(kHasAffiliate), std::string(kHasAffiliation)}, listings::kAffiliation},
        {"coauthor", "Coauthor contexts for every pair of authors sharing a Publishes context",
         {std::string(kCoauthor)}, {}},
    };
    return rules;
}

const RuleInfo& find_rule(std::string_view name) {
    for (const auto& r : rule_registry()) {
        if (r.name == name) return r;
    }
    throw NotFoundError("unknown rule '" + std::string(name) + "'");
}

}  // namespace mesur::inference
