/** Latest-wins request gate: stale responses resolve to undefined. */

export class LatestWins {
  private seq = 0;

  /** Run an async task; if a newer task started meanwhile, drop the result. */
  async run<T>(task: () => Promise<T>): Promise<T | undefined> {
    const id = ++this.seq;
    const result = await task();
    return id === this.seq ? result : undefined;
  }
}
