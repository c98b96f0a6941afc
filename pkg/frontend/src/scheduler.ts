/**
 * Latest-only request pipeline: at most one request in flight, the newest
 * submission always wins, and the final submission is never dropped.
 *
 * While a request is outstanding, newer submissions overwrite a single
 * pending slot; on completion the pending slot (if any) is sent.  Results
 * are delivered in issue order, and a result that arrives after a newer
 * submission was issued is discarded as stale.
 */

export class LatestRequestScheduler<Req, Res> {
  private inFlight = false;
  private pending: Req | null = null;
  private issued = 0;
  private applied = 0;

  constructor(
    private readonly send: (request: Req) => Promise<Res>,
    private readonly onResult: (result: Res) => void,
    private readonly onError: (error: unknown) => void = () => {},
  ) {}

  get busy(): boolean {
    return this.inFlight;
  }

  submit(request: Req): void {
    if (this.inFlight) {
      this.pending = request;
      return;
    }
    this.dispatch(request);
  }

  private dispatch(request: Req): void {
    this.inFlight = true;
    const ticket = ++this.issued;
    this.send(request).then(
      (result) => this.settle(ticket, () => {
        if (ticket > this.applied) {
          this.applied = ticket;
          this.onResult(result);
        }
      }),
      (error) => this.settle(ticket, () => this.onError(error)),
    );
  }

  private settle(ticket: number, deliver: () => void): void {
    const next = this.pending;
    this.pending = null;
    if (next !== null) {
      // deliver the (possibly stale) result, then chase the newest state;
      // inFlight stays true so reentrant submissions queue up as pending
      deliver();
      this.dispatch(next);
    } else {
      this.inFlight = false;
      deliver();
    }
  }
}
