/** Enumerator builder: the workflow that grows the self-feeding chain.
 *
 * The operator picks a base (a constant enumerator) or extends the chain by
 * prepending a head value to the previous enumerator. The signature move is
 * "use last diagonal output as next head": take the newest store value (the
 * diagonal index the last feed produced) as the prepended head. All indices
 * come from the service's /build endpoint; the builder only shuttles strings.
 */

import { ServiceError, WorkbenchClient } from "./client.js";

export interface BuilderStep {
  kind: "const" | "prepend";
  /** Builder arguments, as decimal strings. */
  args: string[];
  /** The constructed enumerator index. */
  index: string;
  /** Store slot the feed landed in. */
  slot: number;
  /** The diagonal index the feed appended at that slot. */
  produced: string;
}

export interface FeedRejection {
  index: string;
  reason: string;
}

export class EnumeratorBuilder {
  readonly steps: BuilderStep[] = [];

  constructor(private readonly client: WorkbenchClient) {}

  /** Index fed last, or null before the first feed. */
  get lastEnumerator(): string | null {
    return this.steps.length ? this.steps[this.steps.length - 1].index : null;
  }

  /** The newest diagonal output — the "next head" in the loop gesture. */
  get lastDiagonalOutput(): string | null {
    return this.steps.length ? this.steps[this.steps.length - 1].produced : null;
  }

  /** Build, certify and feed the constant enumerator with the given value. */
  async feedConst(value: string): Promise<BuilderStep> {
    const { index } = await this.client.build("const", [value]);
    await this.client.certify("enum", index, "const", [value]);
    return this.feedCertified("const", [value], index);
  }

  /** Build, certify and feed prepend(previous enumerator, head). */
  async feedPrepend(prev: string, head: string): Promise<BuilderStep> {
    const { index } = await this.client.build("prepend", [prev, head]);
    await this.client.certify("enum", index, "prepend", [prev, head]);
    return this.feedCertified("prepend", [prev, head], index);
  }

  /** One turn of the loop: prepend the last diagonal output to the last
   * enumerator, certify, feed. Requires at least one prior feed. */
  async feedNextLevel(): Promise<BuilderStep> {
    const prev = this.lastEnumerator;
    const head = this.lastDiagonalOutput;
    if (prev === null || head === null) {
      throw new Error("no previous feed: start with feedConst");
    }
    return this.feedPrepend(prev, head);
  }

  private async feedCertified(
    kind: "const" | "prepend",
    args: string[],
    index: string,
  ): Promise<BuilderStep> {
    const fed = await this.client.feed(index);
    const step: BuilderStep = { kind, args, index, slot: fed.slot, produced: fed.value };
    this.steps.push(step);
    return step;
  }
}

/** Feed an arbitrary index, mapping a gate rejection to a displayable value
 * instead of an exception (the inline-error path of the feed form). */
export async function tryFeed(
  client: WorkbenchClient,
  index: string,
): Promise<{ ok: true; slot: number; value: string } | { ok: false; rejection: FeedRejection }> {
  try {
    const fed = await client.feed(index);
    return { ok: true, slot: fed.slot, value: fed.value };
  } catch (err) {
    if (err instanceof ServiceError && err.isGateRejection) {
      return { ok: false, rejection: { index, reason: err.reason } };
    }
    throw err;
  }
}
