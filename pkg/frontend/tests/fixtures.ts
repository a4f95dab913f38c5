import { ScoreResponse } from "../src/types.js";

// Fixed responses standing in for the scoring service. Values carry
// fractional digits so tests can assert they appear in rendered markup
// exactly as given.

export const FIXTURE_A: ScoreResponse = {
  quality_score: 0.742,
  facets: {
    readability: { score: -3.5, percentile: 87.5 },
    logic: { score: 2.25, percentile: 33.25 },
    credibility: { score: 4.5, percentile: 12.5 },
    formality: { score: 6.75, percentile: 66.75 },
    interactivity: { score: 3.5, percentile: 41.5 },
    interestingness: { score: 1.25, percentile: 58.25 },
    sensation: { score: 0.5, percentile: 91.25 },
    integrity: { score: 8.5, percentile: 24.75 },
  },
  top_contributions: [
    { feature: "exclamation_mark", contribution: 0.0314 },
    { feature: "first_pron", contribution: -0.0272 },
    { feature: "numerals", contribution: 0.0191 },
  ],
  suggestions: [
    {
      facet: "logic",
      guideline: "Connect your points: conjunctions & adversatives show the reader how claims relate.",
      features: ["conjunction", "adversative", "demonstrative_pron"],
    },
    {
      facet: "credibility",
      guideline: "Back claims with specifics; it's numbers and named sources that readers trust.",
      features: ["numerals", "quotation_mark"],
    },
  ],
  model_version: 1,
};

export const FIXTURE_B: ScoreResponse = {
  quality_score: 0.318,
  facets: {
    readability: { score: -1.5, percentile: 45.5 },
    logic: { score: 1.75, percentile: 22.25 },
    credibility: { score: 3.25, percentile: 70.75 },
    formality: { score: 5.5, percentile: 36.5 },
    interactivity: { score: 2.25, percentile: 81.25 },
    interestingness: { score: 0.75, percentile: 14.75 },
    sensation: { score: 1.5, percentile: 52.5 },
    integrity: { score: 6.5, percentile: 63.25 },
  },
  top_contributions: [
    { feature: "question_mark", contribution: 0.0228 },
    { feature: "url", contribution: 0.0117 },
  ],
  suggestions: [
    {
      facet: "integrity",
      guideline: "Round out the post: a headline bracket, an image, or a topic tag fills gaps.",
      features: ["has_head", "has_image", "has_tag"],
    },
  ],
  model_version: 1,
};

export const FIXTURE_ZERO: ScoreResponse = {
  quality_score: 0,
  facets: {
    readability: { score: 0, percentile: 0 },
    logic: { score: 0, percentile: 0 },
    credibility: { score: 0, percentile: 0 },
    formality: { score: 0, percentile: 0 },
    interactivity: { score: 0, percentile: 0 },
    interestingness: { score: 0, percentile: 0 },
    sensation: { score: 0, percentile: 0 },
    integrity: { score: 0, percentile: 0 },
  },
  top_contributions: [],
  suggestions: [],
  model_version: 1,
};

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}
