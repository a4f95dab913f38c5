// Wire types for the scoring service. Field names and shapes mirror the
// JSON emitted by the API exactly; the UI never derives these numbers
// locally, it only displays what the service returned.

export const FACET_NAMES = [
  "readability",
  "logic",
  "credibility",
  "formality",
  "interactivity",
  "interestingness",
  "sensation",
  "integrity",
] as const;

export type FacetName = (typeof FACET_NAMES)[number];

export interface ScoreRequest {
  text: string;
  has_image?: boolean;
  has_video?: boolean;
}

export interface FacetScore {
  score: number;
  percentile: number;
}

export interface Contribution {
  feature: string;
  contribution: number;
}

export interface Suggestion {
  facet: string;
  guideline: string;
  features: string[];
}

export interface ScoreResponse {
  quality_score: number;
  facets: Record<string, FacetScore>;
  top_contributions: Contribution[];
  suggestions: Suggestion[];
  model_version: number;
}

export interface ExtractResponse {
  features: Record<string, number>;
  facets: Record<string, number>;
}

export interface ModelInfo {
  model_version: number;
  created_at: string;
  seed: number;
  feature_count: number;
  score_min: number;
  score_max: number;
  facets: string[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: Record<string, unknown>;
}
