/** View controllers: one parameterized request per state change, stale
 * responses discarded by sequence number, results handed to a renderer
 * untouched. */

import { ApiClient, ApiError } from "./client.js";
import { effectiveRange, type ViewState } from "./state.js";
import type {
  ApiErrorBody, CooccurrenceResponse, EmotionPoint, Meta, SentimentPoint,
  SeriesEnvelope, TermsResponse, TopicsResponse,
} from "./types.js";

export type ErrorSink = (err: ApiErrorBody) => void;

export type UpdateResult = "rendered" | "discarded" | "skipped" | "failed";

abstract class BaseView {
  protected seq = 0;

  constructor(
    protected readonly client: ApiClient,
    protected readonly onError: ErrorSink,
  ) {}

  protected async fetchLatest<T>(url: string): Promise<T | null> {
    const seq = ++this.seq;
    const body = await this.client.getJson<T>(url);
    return seq === this.seq ? body : null;
  }

  protected fail(err: unknown): "failed" {
    if (err instanceof ApiError) {
      this.onError(err.body);
      return "failed";
    }
    throw err;
  }
}

function seriesQuery(state: ViewState, meta: Meta): string {
  const { from, to } = effectiveRange(state, meta);
  const params = new URLSearchParams();
  params.set("granularity", state.granularity);
  if (from !== null) params.set("from", from);
  if (to !== null) params.set("to", to);
  if (state.country !== null) params.set("country", state.country);
  return params.toString();
}

/** Line chart data: overall sentiment over time. */
export class SentimentView extends BaseView {
  constructor(
    client: ApiClient,
    private readonly render: (body: SeriesEnvelope<SentimentPoint>) => void,
    onError: ErrorSink,
  ) {
    super(client, onError);
  }

  buildRequest(state: ViewState, meta: Meta): string {
    return `/api/v1/sentiment?${seriesQuery(state, meta)}`;
  }

  async update(state: ViewState, meta: Meta): Promise<UpdateResult> {
    try {
      const body = await this.fetchLatest<SeriesEnvelope<SentimentPoint>>(
        this.buildRequest(state, meta));
      if (body === null) return "discarded";
      this.render(body);
      return "rendered";
    } catch (err) {
      return this.fail(err);
    }
  }
}

/** Stacked bars: the eight emotions per period, country selectable. */
export class EmotionsView extends BaseView {
  constructor(
    client: ApiClient,
    private readonly render: (body: SeriesEnvelope<EmotionPoint>) => void,
    onError: ErrorSink,
  ) {
    super(client, onError);
  }

  buildRequest(state: ViewState, meta: Meta): string {
    return `/api/v1/emotions?${seriesQuery(state, meta)}`;
  }

  async update(state: ViewState, meta: Meta): Promise<UpdateResult> {
    try {
      const body = await this.fetchLatest<SeriesEnvelope<EmotionPoint>>(
        this.buildRequest(state, meta));
      if (body === null) return "discarded";
      this.render(body);
      return "rendered";
    } catch (err) {
      return this.fail(err);
    }
  }
}

/** Ranked top-word lists for the selected week's topics. */
export class TopicsView extends BaseView {
  constructor(
    client: ApiClient,
    private readonly render: (body: TopicsResponse) => void,
    private readonly renderUnavailable: (week: string | null) => void,
    onError: ErrorSink,
  ) {
    super(client, onError);
  }

  /** Latest modelled week when none is selected. */
  resolveWeek(state: ViewState, meta: Meta): string | null {
    if (state.week !== null) return state.week;
    return meta.topic_weeks.length
      ? meta.topic_weeks[meta.topic_weeks.length - 1]!
      : null;
  }

  buildRequest(state: ViewState, meta: Meta): string {
    const week = this.resolveWeek(state, meta);
    const params = new URLSearchParams();
    params.set("week", week ?? "");
    params.set("n_words", String(state.nWords));
    return `/api/v1/topics?${params.toString()}`;
  }

  async update(state: ViewState, meta: Meta): Promise<UpdateResult> {
    const week = this.resolveWeek(state, meta);
    // /meta gating: an unavailable week renders an empty state, no request
    if (week === null || !meta.topic_weeks.includes(week)) {
      this.seq++;
      this.renderUnavailable(week);
      return "skipped";
    }
    try {
      const body = await this.fetchLatest<TopicsResponse>(
        this.buildRequest(state, meta));
      if (body === null) return "discarded";
      this.render(body);
      return "rendered";
    } catch (err) {
      return this.fail(err);
    }
  }
}

/** Term selector plus country breakdown and co-occurrence top words. */
export class ControversyView extends BaseView {
  private terms: TermsResponse | null = null;

  constructor(
    client: ApiClient,
    private readonly renderTerms: (body: TermsResponse, selected: string) => void,
    private readonly renderCooccurrence: (body: CooccurrenceResponse) => void,
    onError: ErrorSink,
  ) {
    super(client, onError);
  }

  /** The terms list is not filter-parameterized; fetch once per corpus. */
  async loadTerms(): Promise<TermsResponse | null> {
    try {
      this.terms = await this.client.getJson<TermsResponse>(
        "/api/v1/controversy/terms");
      return this.terms;
    } catch (err) {
      this.fail(err);
      return null;
    }
  }

  resolveTerm(state: ViewState): string | null {
    if (state.term !== null) return state.term;
    const first = this.terms?.terms[0];
    return first ? first.term : null;
  }

  buildRequest(state: ViewState): string {
    const params = new URLSearchParams();
    params.set("term", this.resolveTerm(state) ?? "");
    params.set("top_n", String(state.topN));
    return `/api/v1/controversy/cooccurrence?${params.toString()}`;
  }

  async update(state: ViewState): Promise<UpdateResult> {
    if (this.terms === null && (await this.loadTerms()) === null) {
      return "failed";
    }
    const term = this.resolveTerm(state);
    if (term === null) {
      this.seq++;
      return "skipped";
    }
    this.renderTerms(this.terms!, term);
    try {
      const body = await this.fetchLatest<CooccurrenceResponse>(
        this.buildRequest(state));
      if (body === null) return "discarded";
      this.renderCooccurrence(body);
      return "rendered";
    } catch (err) {
      return this.fail(err);
    }
  }
}
