#pragma once

#include <array>
#include <string_view>

// IRI constants of the MESUR vocabulary. Every mesur IRI used in code should
// come from here; the ontology tests check that each one resolves in the schema.

#define MESUR_NS "http://www.mesur.org/schemas/2007-01/mesur#"

namespace mesur::vocab {

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kOwlThing = "http://www.w3.org/2002/07/owl#Thing";

// classes
inline constexpr std::string_view kAgent = MESUR_NS "Agent";
inline constexpr std::string_view kHuman = MESUR_NS "Human";
inline constexpr std::string_view kOrganization = MESUR_NS "Organization";
inline constexpr std::string_view kDocument = MESUR_NS "Document";
inline constexpr std::string_view kGroup = MESUR_NS "Group";
inline constexpr std::string_view kJournal = MESUR_NS "Journal";
inline constexpr std::string_view kProceedings = MESUR_NS "Proceedings";
inline constexpr std::string_view kEditedBook = MESUR_NS "EditedBook";
inline constexpr std::string_view kUnit = MESUR_NS "Unit";
inline constexpr std::string_view kArticle = MESUR_NS "Article";
inline constexpr std::string_view kPreprintArticle = MESUR_NS "PreprintArticle";
inline constexpr std::string_view kBook = MESUR_NS "Book";
inline constexpr std::string_view kContext = MESUR_NS "Context";
inline constexpr std::string_view kEvent = MESUR_NS "Event";
inline constexpr std::string_view kPublishes = MESUR_NS "Publishes";
inline constexpr std::string_view kUses = MESUR_NS "Uses";
inline constexpr std::string_view kState = MESUR_NS "State";
inline constexpr std::string_view kWeightedRelationship = MESUR_NS "WeightedRelationship";
inline constexpr std::string_view kCitation = MESUR_NS "Citation";
inline constexpr std::string_view kCoauthor = MESUR_NS "Coauthor";
inline constexpr std::string_view kAffiliation = MESUR_NS "Affiliation";
inline constexpr std::string_view kMetric = MESUR_NS "Metric";
inline constexpr std::string_view kNumericMetric = MESUR_NS "NumericMetric";
inline constexpr std::string_view kNominalMetric = MESUR_NS "NominalMetric";
inline constexpr std::string_view kImpactFactor = MESUR_NS "ImpactFactor";
inline constexpr std::string_view kUsageImpactFactor = MESUR_NS "UsageImpactFactor";

// context properties
inline constexpr std::string_view kHasUnit = MESUR_NS "hasUnit";
inline constexpr std::string_view kHasGroup = MESUR_NS "hasGroup";
inline constexpr std::string_view kHasAuthor = MESUR_NS "hasAuthor";
inline constexpr std::string_view kHasPublisher = MESUR_NS "hasPublisher";
inline constexpr std::string_view kHasProvider = MESUR_NS "hasProvider";
inline constexpr std::string_view kHasTime = MESUR_NS "hasTime";
inline constexpr std::string_view kHasDocument = MESUR_NS "hasDocument";
inline constexpr std::string_view kHasUser = MESUR_NS "hasUser";
inline constexpr std::string_view kHasSession = MESUR_NS "hasSession";
inline constexpr std::string_view kHasAccessType = MESUR_NS "hasAccessType";
inline constexpr std::string_view kHasSource = MESUR_NS "hasSource";
inline constexpr std::string_view kHasSink = MESUR_NS "hasSink";
inline constexpr std::string_view kHasWeight = MESUR_NS "hasWeight";
inline constexpr std::string_view kHasSourceStartTime = MESUR_NS "hasSourceStartTime";
inline constexpr std::string_view kHasSourceEndTime = MESUR_NS "hasSourceEndTime";
inline constexpr std::string_view kHasSinkStartTime = MESUR_NS "hasSinkStartTime";
inline constexpr std::string_view kHasSinkEndTime = MESUR_NS "hasSinkEndTime";
inline constexpr std::string_view kHasAffiliator = MESUR_NS "hasAffiliator";
inline constexpr std::string_view kHasAffiliatee = MESUR_NS "hasAffiliatee";
inline constexpr std::string_view kHasObject = MESUR_NS "hasObject";
inline constexpr std::string_view kHasStartTime = MESUR_NS "hasStartTime";
inline constexpr std::string_view kHasEndTime = MESUR_NS "hasEndTime";
inline constexpr std::string_view kHasNumericValue = MESUR_NS "hasNumericValue";

// structural
inline constexpr std::string_view kPartOf = MESUR_NS "partOf";

// inferred properties
inline constexpr std::string_view kAuthored = MESUR_NS "authored";
inline constexpr std::string_view kAuthoredBy = MESUR_NS "authoredBy";
inline constexpr std::string_view kPublished = MESUR_NS "published";
inline constexpr std::string_view kPublishedBy = MESUR_NS "publishedBy";
inline constexpr std::string_view kUsed = MESUR_NS "used";
inline constexpr std::string_view kUsedBy = MESUR_NS "usedBy";
inline constexpr std::string_view kContains = MESUR_NS "contains";
inline constexpr std::string_view kContainedIn = MESUR_NS "containedIn";
inline constexpr std::string_view kHasAffiliate = MESUR_NS "hasAffiliate";
inline constexpr std::string_view kHasAffiliation = MESUR_NS "hasAffiliation";

/// Every mesur IRI constant above, for lint-style checks.
inline constexpr std::array kAllMesurIris = {
    kAgent, kHuman, kOrganization, kDocument, kGroup, kJournal, kProceedings, kEditedBook, kUnit,
    kArticle, kPreprintArticle, kBook, kContext, kEvent, kPublishes, kUses, kState,
    kWeightedRelationship, kCitation, kCoauthor, kAffiliation, kMetric, kNumericMetric,
    kNominalMetric, kImpactFactor, kUsageImpactFactor, kHasUnit, kHasGroup, kHasAuthor,
    kHasPublisher, kHasProvider, kHasTime, kHasDocument, kHasUser, kHasSession, kHasAccessType,
    kHasSource, kHasSink, kHasWeight, kHasSourceStartTime, kHasSourceEndTime, kHasSinkStartTime,
    kHasSinkEndTime, kHasAffiliator, kHasAffiliatee, kHasObject, kHasStartTime, kHasEndTime,
    kHasNumericValue, kPartOf, kAuthored, kAuthoredBy, kPublished, kPublishedBy, kUsed, kUsedBy,
    kContains, kContainedIn, kHasAffiliate, kHasAffiliation,
};

}  // namespace mesur::vocab
