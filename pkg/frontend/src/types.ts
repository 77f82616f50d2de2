/** Payload shapes of the /api/v1 endpoints the dashboard consumes. */

export type Granularity = "day" | "week";

export const EMOTIONS = [
  "anger", "fear", "sadness", "disgust",
  "surprise", "anticipation", "trust", "joy",
] as const;

export type Emotion = (typeof EMOTIONS)[number];

export interface Meta {
  corpus_id: string;
  built_at: string;
  date_range: {
    from_day: string | null;
    to_day: string | null;
    from_week: string | null;
    to_week: string | null;
  };
  countries: string[];
  weeks: string[];
  topic_weeks: string[];
  controversy_terms: string[];
}

export interface SeriesEnvelope<P> {
  metric: string;
  granularity: Granularity;
  from: string | null;
  to: string | null;
  country: string | null;
  series: P[];
}

export interface SentimentPoint {
  period: string;
  count: number;
  mean: number | null;
  positivity: number | null;
  negativity: number | null;
}

export type EmotionPoint = { period: string; count: number } & {
  [E in Emotion]: number | null;
};

export interface VolumePoint {
  period: string;
  count: number;
}

export interface TopicsResponse {
  week: string;
  n_words: number;
  topics: { topic: number; words: [string, number][] }[];
}

export interface BreakdownEntry {
  count: number;
  fraction: number | null;
}

export interface TermSummary {
  term: string;
  total_hits: number;
  breakdown: {
    countries: Record<string, BreakdownEntry>;
    unknown: number;
  };
}

export interface TermsResponse {
  terms: TermSummary[];
}

export interface CooccurrenceResponse {
  term: string;
  total_hits: number;
  top: { token: string; count: number }[];
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
}
